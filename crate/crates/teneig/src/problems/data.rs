//! Embedded tensor entries and reference eigenpairs for the built-in
//! datasets. Values are stored exactly as printed at four decimal places;
//! index tuples are 1-based and nondecreasing, one per symmetry orbit.

// These are published reference values, not math constants; one eigenvalue
// (0.5236) coincidentally rounds like pi/6.
#![allow(clippy::approx_constant)]

use crate::geap::Classification;

pub(crate) const KORE02_A: [([usize; 4], f64); 15] = [
    ([1, 1, 1, 1], 0.2883),
    ([1, 1, 1, 2], -0.0031),
    ([1, 1, 1, 3], 0.1973),
    ([1, 1, 2, 2], -0.2485),
    ([1, 1, 2, 3], -0.2939),
    ([1, 1, 3, 3], 0.3847),
    ([1, 2, 2, 2], 0.2972),
    ([1, 2, 2, 3], 0.1862),
    ([1, 2, 3, 3], 0.0919),
    ([1, 3, 3, 3], -0.3619),
    ([2, 2, 2, 2], 0.1241),
    ([2, 2, 2, 3], -0.3420),
    ([2, 2, 3, 3], 0.2127),
    ([2, 3, 3, 3], 0.2727),
    ([3, 3, 3, 3], -0.3054),
];

pub(crate) const HEIG_A: [([usize; 6], f64); 84] = [
    ([1, 1, 1, 1, 1, 1], 0.2888),
    ([1, 1, 1, 1, 1, 2], -0.0013),
    ([1, 1, 1, 1, 1, 3], -0.1422),
    ([1, 1, 1, 1, 1, 4], -0.0323),
    ([1, 1, 1, 1, 2, 2], -0.1079),
    ([1, 1, 1, 1, 2, 3], -0.0899),
    ([1, 1, 1, 1, 2, 4], -0.2487),
    ([1, 1, 1, 1, 3, 3], 0.0231),
    ([1, 1, 1, 1, 3, 4], -0.0106),
    ([1, 1, 1, 1, 4, 4], 0.0740),
    ([1, 1, 1, 2, 2, 2], 0.1490),
    ([1, 1, 1, 2, 2, 3], 0.0527),
    ([1, 1, 1, 2, 2, 4], -0.0710),
    ([1, 1, 1, 2, 3, 3], -0.1039),
    ([1, 1, 1, 2, 3, 4], -0.0250),
    ([1, 1, 1, 2, 4, 4], 0.0169),
    ([1, 1, 1, 3, 3, 3], 0.2208),
    ([1, 1, 1, 3, 3, 4], 0.0662),
    ([1, 1, 1, 3, 4, 4], 0.0046),
    ([1, 1, 1, 4, 4, 4], 0.0943),
    ([1, 1, 2, 2, 2, 2], -0.1144),
    ([1, 1, 2, 2, 2, 3], -0.1295),
    ([1, 1, 2, 2, 2, 4], -0.0484),
    ([1, 1, 2, 2, 3, 3], 0.0238),
    ([1, 1, 2, 2, 3, 4], -0.0237),
    ([1, 1, 2, 2, 4, 4], 0.0308),
    ([1, 1, 2, 3, 3, 3], 0.0142),
    ([1, 1, 2, 3, 3, 4], 0.0006),
    ([1, 1, 2, 3, 4, 4], -0.0044),
    ([1, 1, 2, 4, 4, 4], 0.0353),
    ([1, 1, 3, 3, 3, 3], 0.0947),
    ([1, 1, 3, 3, 3, 4], -0.0610),
    ([1, 1, 3, 3, 4, 4], -0.0293),
    ([1, 1, 3, 4, 4, 4], 0.0638),
    ([1, 1, 4, 4, 4, 4], 0.2326),
    ([1, 2, 2, 2, 2, 2], -0.2574),
    ([1, 2, 2, 2, 2, 3], 0.1018),
    ([1, 2, 2, 2, 2, 4], 0.0044),
    ([1, 2, 2, 2, 3, 3], 0.0248),
    ([1, 2, 2, 2, 3, 4], 0.0562),
    ([1, 2, 2, 2, 4, 4], 0.0221),
    ([1, 2, 2, 3, 3, 3], 0.0612),
    ([1, 2, 2, 3, 3, 4], 0.0184),
    ([1, 2, 2, 3, 4, 4], 0.0226),
    ([1, 2, 2, 4, 4, 4], 0.0247),
    ([1, 2, 3, 3, 3, 3], 0.0847),
    ([1, 2, 3, 3, 3, 4], -0.0209),
    ([1, 2, 3, 3, 4, 4], -0.0795),
    ([1, 2, 3, 4, 4, 4], -0.0323),
    ([1, 2, 4, 4, 4, 4], -0.0819),
    ([1, 3, 3, 3, 3, 3], 0.5486),
    ([1, 3, 3, 3, 3, 4], -0.0311),
    ([1, 3, 3, 3, 4, 4], -0.0592),
    ([1, 3, 3, 4, 4, 4], 0.0386),
    ([1, 3, 4, 4, 4, 4], -0.0138),
    ([1, 4, 4, 4, 4, 4], 0.0246),
    ([2, 2, 2, 2, 2, 2], 0.9207),
    ([2, 2, 2, 2, 2, 3], -0.0908),
    ([2, 2, 2, 2, 2, 4], 0.0633),
    ([2, 2, 2, 2, 3, 3], 0.1116),
    ([2, 2, 2, 2, 3, 4], -0.0318),
    ([2, 2, 2, 2, 4, 4], 0.1629),
    ([2, 2, 2, 3, 3, 3], 0.1797),
    ([2, 2, 2, 3, 3, 4], -0.0348),
    ([2, 2, 2, 3, 4, 4], -0.0058),
    ([2, 2, 2, 4, 4, 4], 0.1359),
    ([2, 2, 3, 3, 3, 3], 0.0584),
    ([2, 2, 3, 3, 3, 4], -0.0299),
    ([2, 2, 3, 3, 4, 4], -0.0110),
    ([2, 2, 3, 4, 4, 4], 0.1375),
    ([2, 2, 4, 4, 4, 4], -0.1405),
    ([2, 3, 3, 3, 3, 3], 0.3613),
    ([2, 3, 3, 3, 3, 4], 0.0809),
    ([2, 3, 3, 3, 4, 4], 0.0205),
    ([2, 3, 3, 4, 4, 4], 0.0196),
    ([2, 3, 4, 4, 4, 4], 0.0226),
    ([2, 4, 4, 4, 4, 4], -0.2487),
    ([3, 3, 3, 3, 3, 3], 0.6007),
    ([3, 3, 3, 3, 3, 4], -0.0272),
    ([3, 3, 3, 3, 4, 4], -0.1343),
    ([3, 3, 3, 4, 4, 4], -0.0233),
    ([3, 3, 4, 4, 4, 4], -0.0227),
    ([3, 4, 4, 4, 4, 4], -0.3355),
    ([4, 4, 4, 4, 4, 4], -0.5937),
];

pub(crate) const DEIG_A: [([usize; 4], f64); 15] = [
    ([1, 1, 1, 1], 0.4982),
    ([1, 1, 1, 2], -0.0582),
    ([1, 1, 1, 3], -1.1719),
    ([1, 1, 2, 2], 0.2236),
    ([1, 1, 2, 3], -0.0171),
    ([1, 1, 3, 3], 0.4597),
    ([1, 2, 2, 2], 0.4880),
    ([1, 2, 2, 3], 0.1852),
    ([1, 2, 3, 3], -0.4087),
    ([1, 3, 3, 3], 0.7639),
    ([2, 2, 2, 2], 0.0000),
    ([2, 2, 2, 3], -0.6162),
    ([2, 2, 3, 3], 0.1519),
    ([2, 3, 3, 3], 0.7631),
    ([3, 3, 3, 3], 2.6311),
];

#[cfg(test)]
pub(crate) const DEIG_B_CHECK: [([usize; 4], f64); 15] = [
    ([1, 1, 1, 1], 3.0800),
    ([1, 1, 1, 2], 0.0614),
    ([1, 1, 1, 3], 0.2317),
    ([1, 1, 2, 2], 0.8140),
    ([1, 1, 2, 3], 0.0130),
    ([1, 1, 3, 3], 2.3551),
    ([1, 2, 2, 2], 0.0486),
    ([1, 2, 2, 3], 0.0616),
    ([1, 2, 3, 3], 0.0482),
    ([1, 3, 3, 3], 0.5288),
    ([2, 2, 2, 2], 1.9321),
    ([2, 2, 2, 3], 0.0236),
    ([2, 2, 3, 3], 1.8563),
    ([2, 3, 3, 3], 0.0681),
    ([3, 3, 3, 3], 16.0480),
];

pub(crate) const RANDOM_B: [([usize; 6], f64); 84] = [
    ([1, 1, 1, 1, 1, 1], 0.2678),
    ([1, 1, 1, 1, 1, 2], -0.0044),
    ([1, 1, 1, 1, 1, 3], -0.0326),
    ([1, 1, 1, 1, 1, 4], -0.0081),
    ([1, 1, 1, 1, 2, 2], 0.0591),
    ([1, 1, 1, 1, 2, 3], -0.0009),
    ([1, 1, 1, 1, 2, 4], -0.0045),
    ([1, 1, 1, 1, 3, 3], 0.0533),
    ([1, 1, 1, 1, 3, 4], -0.0059),
    ([1, 1, 1, 1, 4, 4], 0.0511),
    ([1, 1, 1, 2, 2, 2], -0.0029),
    ([1, 1, 1, 2, 2, 3], -0.0072),
    ([1, 1, 1, 2, 2, 4], -0.0016),
    ([1, 1, 1, 2, 3, 3], -0.0005),
    ([1, 1, 1, 2, 3, 4], 0.0007),
    ([1, 1, 1, 2, 4, 4], -0.0006),
    ([1, 1, 1, 3, 3, 3], -0.0185),
    ([1, 1, 1, 3, 3, 4], 0.0001),
    ([1, 1, 1, 3, 4, 4], -0.0058),
    ([1, 1, 1, 4, 4, 4], -0.0046),
    ([1, 1, 2, 2, 2, 2], 0.0651),
    ([1, 1, 2, 2, 2, 3], -0.0013),
    ([1, 1, 2, 2, 2, 4], -0.0050),
    ([1, 1, 2, 2, 3, 3], 0.0190),
    ([1, 1, 2, 2, 3, 4], -0.0023),
    ([1, 1, 2, 2, 4, 4], 0.0190),
    ([1, 1, 2, 3, 3, 3], -0.0011),
    ([1, 1, 2, 3, 3, 4], -0.0014),
    ([1, 1, 2, 3, 4, 4], 0.0000),
    ([1, 1, 2, 4, 4, 4], -0.0043),
    ([1, 1, 3, 3, 3, 3], 0.0498),
    ([1, 1, 3, 3, 3, 4], -0.0061),
    ([1, 1, 3, 3, 4, 4], 0.0169),
    ([1, 1, 3, 4, 4, 4], -0.0060),
    ([1, 1, 4, 4, 4, 4], 0.0486),
    ([1, 2, 2, 2, 2, 2], -0.0054),
    ([1, 2, 2, 2, 2, 3], -0.0078),
    ([1, 2, 2, 2, 2, 4], -0.0016),
    ([1, 2, 2, 2, 3, 3], -0.0006),
    ([1, 2, 2, 2, 3, 4], 0.0008),
    ([1, 2, 2, 2, 4, 4], -0.0006),
    ([1, 2, 2, 3, 3, 3], -0.0067),
    ([1, 2, 2, 3, 3, 4], 0.0001),
    ([1, 2, 2, 3, 4, 4], -0.0022),
    ([1, 2, 2, 4, 4, 4], -0.0016),
    ([1, 2, 3, 3, 3, 3], -0.0002),
    ([1, 2, 3, 3, 3, 4], 0.0006),
    ([1, 2, 3, 3, 4, 4], -0.0002),
    ([1, 2, 3, 4, 4, 4], 0.0006),
    ([1, 2, 4, 4, 4, 4], -0.0003),
    ([1, 3, 3, 3, 3, 3], -0.0286),
    ([1, 3, 3, 3, 3, 4], 0.0017),
    ([1, 3, 3, 3, 4, 4], -0.0056),
    ([1, 3, 3, 4, 4, 4], 0.0001),
    ([1, 3, 4, 4, 4, 4], -0.0051),
    ([1, 4, 4, 4, 4, 4], -0.0073),
    ([2, 2, 2, 2, 2, 2], 0.3585),
    ([2, 2, 2, 2, 2, 3], -0.0082),
    ([2, 2, 2, 2, 2, 4], -0.0279),
    ([2, 2, 2, 2, 3, 3], 0.0610),
    ([2, 2, 2, 2, 3, 4], -0.0076),
    ([2, 2, 2, 2, 4, 4], 0.0636),
    ([2, 2, 2, 3, 3, 3], -0.0042),
    ([2, 2, 2, 3, 3, 4], -0.0044),
    ([2, 2, 2, 3, 4, 4], -0.0002),
    ([2, 2, 2, 4, 4, 4], -0.0145),
    ([2, 2, 3, 3, 3, 3], 0.0518),
    ([2, 2, 3, 3, 3, 4], -0.0067),
    ([2, 2, 3, 3, 4, 4], 0.0184),
    ([2, 2, 3, 4, 4, 4], -0.0069),
    ([2, 2, 4, 4, 4, 4], 0.0549),
    ([2, 3, 3, 3, 3, 3], -0.0059),
    ([2, 3, 3, 3, 3, 4], -0.0034),
    ([2, 3, 3, 3, 4, 4], -0.0002),
    ([2, 3, 3, 4, 4, 4], -0.0039),
    ([2, 3, 4, 4, 4, 4], 0.0010),
    ([2, 4, 4, 4, 4, 4], -0.0208),
    ([3, 3, 3, 3, 3, 3], 0.2192),
    ([3, 3, 3, 3, 3, 4], -0.0294),
    ([3, 3, 3, 3, 4, 4], 0.0477),
    ([3, 3, 3, 4, 4, 4], -0.0181),
    ([3, 3, 4, 4, 4, 4], 0.0485),
    ([3, 4, 4, 4, 4, 4], -0.0304),
    ([4, 4, 4, 4, 4, 4], 0.2305),
];

pub(crate) const KORE02_FIXTURES: [(f64, [f64; 3], [f64; 2], Classification); 11] = [
    (-1.0954, [0.5915, -0.7467, -0.3043], [1.86, 2.75], Classification::Minimum),
    (-0.5629, [0.1762, -0.1796, 0.9678], [1.63, 2.38], Classification::Minimum),
    (-0.0451, [0.7797, 0.6135, 0.1250], [0.82, 1.25], Classification::Minimum),
    (0.1735, [0.3357, 0.9073, 0.2531], [-1.10, 0.86], Classification::Saddle),
    (0.2433, [0.9895, 0.0947, -0.1088], [-1.19, 1.46], Classification::Saddle),
    (0.2628, [0.1318, -0.4425, -0.8870], [0.62, -2.17], Classification::Saddle),
    (0.2682, [0.6099, 0.4362, 0.6616], [-1.18, 0.79], Classification::Saddle),
    (0.3633, [0.2676, 0.6447, 0.7160], [-1.18, -0.57], Classification::Maximum),
    (0.5105, [0.3598, -0.7780, 0.5150], [0.59, -2.34], Classification::Saddle),
    (0.8169, [0.8412, -0.2635, 0.4722], [-2.26, -0.90], Classification::Maximum),
    (0.8893, [0.6672, 0.2471, -0.7027], [-1.85, -0.89], Classification::Maximum),
];

pub(crate) const HEIG_FIXTURES: [(f64, [f64; 4], [f64; 3], Classification); 34] = [
    (-10.7440, [0.4664, 0.4153, -0.5880, -0.5140], [75.69, 30.21, 41.28], Classification::Minimum),
    (-8.3201, [0.5970, -0.5816, -0.4740, -0.2842], [62.11, 28.56, 15.64], Classification::Minimum),
    (-4.1781, [0.4397, 0.5139, -0.5444, 0.4962], [5.67, 31.85, 21.21], Classification::Minimum),
    (-3.7180, [0.6843, 0.5519, 0.3136, 0.3589], [26.89, 7.05, 12.50], Classification::Minimum),
    (-3.3137, [0.5588, 0.4954, -0.6348, 0.1986], [-4.83, 11.31, 17.73], Classification::Saddle),
    (-3.0892, [0.6418, -0.2049, -0.6594, -0.3336], [-10.41, 22.10, 6.26], Classification::Saddle),
    (-2.9314, [0.3161, 0.5173, 0.4528, -0.6537], [31.95, 6.88, 13.47], Classification::Minimum),
    (-2.0437, [0.6637, 0.5911, -0.2205, 0.4017], [15.87, -4.81, 8.30], Classification::Saddle),
    (-1.3431, [0.0544, 0.4258, 0.0285, 0.9027], [4.40, 2.04, -0.85], Classification::Saddle),
    (-1.0965, [0.5156, 0.3387, 0.4874, 0.6180], [24.09, 14.29, -13.10], Classification::Saddle),
    (-1.0071, [0.2030, 0.5656, -0.0975, -0.7933], [-3.71, 4.13, 5.35], Classification::Saddle),
    (-0.3600, [0.6999, -0.1882, 0.3292, -0.6053], [9.74, 3.89, -2.07], Classification::Saddle),
    (-0.3428, [0.3879, -0.1700, 0.5174, -0.7436], [-3.52, 6.07, 1.24], Classification::Saddle),
    (0.0073, [0.3068, 0.0539, 0.3127, -0.8973], [-2.92, -1.29, 1.22], Classification::Saddle),
    (0.1902, [0.9744, -0.0316, 0.2013, -0.0952], [-1.49, 2.17, 0.65], Classification::Saddle),
    (0.3947, [0.5416, 0.4650, 0.0708, 0.6967], [8.59, -15.89, -3.63], Classification::Saddle),
    (0.4679, [0.9613, 0.0442, -0.2718, 0.0083], [1.32, -1.33, -1.73], Classification::Saddle),
    (0.5126, [0.4232, -0.6781, -0.2347, 0.5532], [-8.44, 9.45, 7.66], Classification::Saddle),
    (0.5236, [0.3092, 0.8725, 0.1389, -0.3518], [-2.58, 1.68, 3.60], Classification::Saddle),
    (0.7573, [0.5830, -0.2565, -0.3076, -0.7069], [1.86, -5.35, -14.39], Classification::Saddle),
    (0.8693, [0.2414, 0.8332, -0.2479, -0.4313], [3.48, -3.31, -2.38], Classification::Saddle),
    (0.9572, [0.1035, -0.9754, -0.1932, -0.0221], [-2.05, 0.83, 1.80], Classification::Saddle),
    (1.1006, [0.2033, -0.9035, -0.1584, 0.3424], [2.10, -2.38, -1.15], Classification::Saddle),
    (2.3186, [0.1227, -0.8044, -0.0334, -0.5804], [2.50, -2.74, -10.23], Classification::Saddle),
    (2.7045, [0.3618, -0.5607, -0.5723, 0.4766], [8.78, -17.72, -21.79], Classification::Saddle),
    (3.3889, [0.6320, 0.5549, 0.3596, -0.4043], [16.59, -25.41, -17.68], Classification::Saddle),
    (3.9099, [0.6722, -0.2683, -0.1665, 0.6697], [-21.17, -4.98, 5.01], Classification::Saddle),
    (4.8422, [0.5895, -0.2640, -0.4728, 0.5994], [-28.20, -6.48, -15.54], Classification::Maximum),
    (5.1757, [0.6513, 0.0021, 0.7550, -0.0760], [-23.82, 3.66, -3.35], Classification::Saddle),
    (5.8493, [0.6528, 0.5607, -0.0627, -0.5055], [-34.20, -22.87, -9.58], Classification::Maximum),
    (8.7371, [0.4837, 0.5502, 0.6671, -0.1354], [-7.66, -19.48, -43.93], Classification::Maximum),
    (9.0223, [0.5927, -0.5567, 0.5820, -0.0047], [-58.03, -28.84, 4.60], Classification::Saddle),
    (9.6386, [0.5342, -0.5601, 0.5466, -0.3197], [-64.78, -41.13, -9.04], Classification::Maximum),
    (14.6941, [0.5426, -0.4853, 0.4760, 0.4936], [-94.14, -61.11, -54.81], Classification::Maximum),
];

pub(crate) const DEIG_FIXTURES: [(f64, [f64; 3], [f64; 2], Classification); 13] = [
    (-0.3313, [0.2309, -0.7741, -0.1509], [1.02, 2.11], Classification::Minimum),
    (-0.1242, [0.6577, 0.0712, 0.2189], [0.35, 1.25], Classification::Minimum),
    (-0.0074, [0.2161, 0.3149, -0.4485], [0.36, 0.46], Classification::Minimum),
    (0.0611, [0.6113, -0.4573, 0.1181], [-0.63, 1.14], Classification::Saddle),
    (0.1039, [0.3314, 0.5239, 0.3084], [-0.46, 0.63], Classification::Saddle),
    (0.2009, [0.2440, -0.1250, 0.4601], [-0.32, 0.07], Classification::Saddle),
    (0.2056, [0.1211, -0.2367, -0.4766], [-0.29, 0.13], Classification::Saddle),
    (0.2219, [0.1143, 0.1812, 0.4773], [-0.08, -0.20], Classification::Maximum),
    (0.2431, [0.0943, -0.6840, 0.2905], [0.18, -1.11], Classification::Saddle),
    (0.2514, [0.2485, -0.5579, 0.3363], [-0.14, -0.71], Classification::Maximum),
    (0.3827, [0.6236, 0.3954, -0.1678], [-1.58, 0.32], Classification::Saddle),
    (0.4359, [0.4336, 0.6714, -0.0949], [-0.43, -1.64], Classification::Maximum),
    (0.5356, [0.6638, -0.1123, -0.2537], [-0.48, -1.43], Classification::Maximum),
];

pub(crate) const RANDOM_FIXTURES: [(f64, [f64; 4], [f64; 3], Classification); 26] = [
    (-6.3985, [0.0733, 0.1345, 0.3877, 0.9090], [20.43, 4.93, 11.20], Classification::Minimum),
    (-3.5998, [0.7899, 0.4554, 0.2814, 0.2991], [8.05, 10.39, 12.41], Classification::Minimum),
    (-3.2777, [0.6888, -0.6272, -0.2914, -0.2174], [8.27, 3.65, 5.95], Classification::Minimum),
    (-1.7537, [0.6329, -0.2966, -0.6812, -0.2180], [-4.25, 3.00, 5.56], Classification::Saddle),
    (-1.1507, [0.1935, 0.5444, 0.2991, -0.7594], [0.73, 3.54, 4.20], Classification::Minimum),
    (-1.0696, [0.1372, 0.5068, 0.0665, -0.8485], [-1.54, 3.30, 3.64], Classification::Saddle),
    (-1.0456, [0.2365, 0.4798, -0.7212, 0.4402], [-1.16, 1.54, 2.57], Classification::Saddle),
    (-0.7842, [0.5409, 0.3388, 0.4698, 0.6099], [16.02, 8.79, -12.47], Classification::Saddle),
    (-0.7457, [0.6348, 0.5354, -0.4388, 0.3434], [2.49, 0.94, -1.59], Classification::Saddle),
    (-0.2542, [0.3900, -0.1333, 0.4946, -0.7652], [-2.51, 2.99, 0.93], Classification::Saddle),
    (-0.2359, [0.6956, -0.1369, 0.3550, -0.6094], [6.38, 2.23, -1.27], Classification::Saddle),
    (0.0132, [0.3064, 0.0541, 0.3111, -0.8980], [-5.33, -2.36, 2.21], Classification::Saddle),
    (0.1633, [0.4278, -0.6578, -0.2545, 0.5652], [-2.42, 3.86, 2.36], Classification::Saddle),
    (0.3250, [0.5265, 0.4653, 0.0927, 0.7055], [7.50, -12.05, -3.41], Classification::Saddle),
    (0.5206, [0.3738, -0.4806, -0.6066, 0.5111], [3.19, -2.27, -1.47], Classification::Saddle),
    (0.5463, [0.5157, -0.3055, -0.3313, -0.7287], [-9.91, -3.67, 1.37], Classification::Saddle),
    (0.5945, [0.4015, 0.8447, 0.1782, -0.3058], [-3.70, 4.95, 1.87], Classification::Saddle),
    (0.6730, [0.9634, -0.0009, 0.2396, -0.1204], [-5.84, 7.88, 1.78], Classification::Saddle),
    (0.8862, [0.3559, 0.8571, -0.1675, -0.3326], [3.55, -2.24, -2.63], Classification::Saddle),
    (1.2962, [0.9849, 0.0018, -0.1681, 0.0419], [2.20, -5.97, -3.18], Classification::Saddle),
    (1.4646, [0.7396, 0.4441, 0.4009, -0.3083], [8.41, -2.08, -7.72], Classification::Saddle),
    (2.9979, [0.8224, 0.4083, -0.0174, -0.3958], [-4.00, -5.46, -6.56], Classification::Maximum),
    (3.5181, [0.4494, -0.7574, 0.4502, -0.1469], [-9.40, 1.89, -2.83], Classification::Saddle),
    (3.6087, [0.0340, -0.8989, -0.0373, -0.4353], [0.87, -8.03, -5.77], Classification::Saddle),
    (3.7394, [0.2185, -0.9142, 0.2197, -0.2613], [-8.72, -0.90, -3.34], Classification::Maximum),
    (11.3476, [0.4064, 0.2313, 0.8810, 0.0716], [-7.20, -18.98, -21.53], Classification::Maximum),
];
