//! Published values that the computations are checked against.

/// Checkpoints of the pair-count table, desk-scale columns first.
pub const TABLE1_X: [u64; 6] = [
    1_000,
    10_000,
    1_000_000,
    100_000_000,
    10_000_000_000,
    1_000_000_000_000,
];

pub struct Table1Row {
    pub two_r: u64,
    /// `pi_2r(x)` at each entry of [`TABLE1_X`].
    pub counts: [u64; 6],
    pub ratio: (u64, u64),
}

const fn t1(two_r: u64, counts: [u64; 6], ratio: (u64, u64)) -> Table1Row {
    Table1Row { two_r, counts, ratio }
}

pub const TABLE1: [Table1Row; 14] = [
    t1(2, [35, 205, 8169, 440312, 27412679, 1870585220], (1, 1)),
    t1(4, [41, 203, 8144, 440258, 27409999, 1870585459], (1, 1)),
    t1(6, [74, 411, 16386, 879908, 54818296, 3741217498], (2, 1)),
    t1(8, [38, 208, 8242, 439908, 27411508, 1870580394], (1, 1)),
    t1(10, [51, 270, 10934, 586811, 36548839, 2494056601], (4, 3)),
    t1(12, [70, 404, 16378, 880196, 54822710, 3741051790], (2, 1)),
    t1(14, [48, 245, 9878, 528095, 32891699, 2244614812], (6, 5)),
    t1(16, [39, 200, 8210, 441055, 27414828, 1870557044], (1, 1)),
    t1(18, [74, 417, 16451, 880444, 54823059, 3741063106], (2, 1)),
    t1(20, [48, 269, 10972, 586267, 36548155, 2494072774], (4, 3)),
    t1(22, [41, 226, 9171, 489085, 30459489, 2078443752], (10, 9)),
    t1(24, [79, 404, 16343, 880927, 54823858, 3741122743], (2, 1)),
    t1(30, [99, 536, 21990, 1173934, 73094856, 4988150875], (8, 3)),
    t1(210, [107, 641, 26178, 1409150, 87712009, 5985825351], (16, 5)),
];

pub struct DeltaRow {
    pub two_n: u64,
    pub pi_n: u64,
    pub delta_n: f64,
}

const fn d(two_n: u64, pi_n: u64, delta_n: f64) -> DeltaRow {
    DeltaRow { two_n, pi_n, delta_n }
}

/// `(2N, S_N / C_2)`.
pub const S_OVER_C2: [(u64, f64); 14] = [
    (100, 73.6377551),
    (200, 149.3252708),
    (300, 225.4407734),
    (400, 300.3132204),
    (500, 376.0636735),
    (600, 452.4693143),
    (700, 527.3827110),
    (800, 603.4536365),
    (900, 679.4011178),
    (1000, 754.4223630),
    (2000, 1511.5853400),
    (3000, 2269.6853566),
    (4000, 3026.0445409),
    (5000, 3783.8474197),
];

pub const DELTA_1E6: [DeltaRow; 14] = [
    d(100, 605087, 0.09722),
    d(200, 1226667, -0.02199),
    d(300, 1851433, -0.12785),
    d(400, 2465581, -0.23344),
    d(500, 3086695, -0.32860),
    d(600, 3714028, -0.31371),
    d(700, 4328507, -0.34805),
    d(800, 4951873, -0.42140),
    d(900, 5574196, -0.48004),
    d(1000, 6188960, -0.52230),
    d(2000, 12391586, -0.78001),
    d(3000, 18597363, -0.95390),
    d(4000, 24783891, -1.11135),
    d(5000, 30975067, -1.28953),
];

pub const DELTA_1E8: [DeltaRow; 14] = [
    d(100, 32417440, -0.08872),
    d(200, 65739481, 0.03162),
    d(300, 99245855, -0.09833),
    d(400, 132202659, -0.23013),
    d(500, 165551273, -0.18188),
    d(600, 199186203, -0.19507),
    d(700, 232164862, -0.18926),
    d(800, 265651152, -0.21737),
    d(900, 299079601, -0.28690),
    d(1000, 332105577, -0.27582),
    d(2000, 665435604, -0.16751),
    d(3000, 999175096, -0.14446),
    d(4000, 1332114654, -0.23565),
    d(5000, 1665693721, -0.28111),
];

pub const DELTA_1E10: [DeltaRow; 14] = [
    d(100, 2018498733, 0.23101),
    d(200, 4093181354, 0.19981),
    d(300, 6179575427, 0.04646),
    d(400, 8231900717, -0.00307),
    d(500, 10308323520, 0.09461),
    d(600, 12402663153, 0.00891),
    d(700, 14456137134, 0.06512),
    d(800, 16541312091, 0.03187),
    d(900, 18623097684, -0.00710),
    d(1000, 20679532323, 0.04311),
    d(2000, 41434008965, -0.14700),
    d(3000, 62214267139, -0.14273),
    d(4000, 82946817735, -0.13473),
    d(5000, 103718886923, -0.15324),
];

pub const DELTA_1E12: [DeltaRow; 14] = [
    d(100, 137743459486, -0.22449),
    d(200, 279320931774, -0.52374),
    d(300, 421698995095, -0.60678),
    d(400, 561752066806, -0.47345),
    d(500, 703447298670, -0.52336),
    d(600, 846368266787, -0.46665),
    d(700, 986498011024, -0.37686),
    d(800, 1128792535379, -0.48827),
    d(900, 1270856645797, -0.39850),
    d(1000, 1411187901897, -0.41454),
    d(2000, 2827502930522, -0.31142),
    d(3000, 4245571295213, -0.21865),
    d(4000, 5660383932743, -0.12392),
    d(5000, 7077896171945, -0.12569),
];

/// The published `Delta_N` rows at `x`, if any.
pub fn delta_rows(x: u64) -> Option<&'static [DeltaRow; 14]> {
    match x {
        1_000_000 => Some(&DELTA_1E6),
        100_000_000 => Some(&DELTA_1E8),
        10_000_000_000 => Some(&DELTA_1E10),
        1_000_000_000_000 => Some(&DELTA_1E12),
        _ => None,
    }
}

/// `T(x)` computed from `psi(x)`.
pub const T_PSI: [(u64, f64); 4] = [
    (1_000_000, 0.41156),
    (100_000_000, 0.17554),
    (10_000_000_000, -0.42122),
    (1_000_000_000_000, -0.04014),
];

/// `T(10^6)` from the first two million zeros.
pub const T_ZEROS_1E6: f64 = 0.41276;

pub const L2: [(u64, f64); 4] = [
    (1_000_000, 8248.0297),
    (100_000_000, 440367.7942),
    (10_000_000_000, 27411416.53),
    (1_000_000_000_000, 1870559866.82),
];

/// `(x, li_2(x), printed decimals)`.
pub const LI2: [(u64, f64, u32); 4] = [
    (1_000, 34.6851, 4),
    (10_000, 162.2412, 4),
    (100_000, 945.75959, 5),
    (1_000_000, 6246.9757, 4),
];

pub const C2: f64 = 0.6601618158;

/// `Delta_N(10^11)` for `2N = 1000, ..., 5000`, three decimals.
pub const DELTA_1E11: [(u64, f64); 5] = [(1000, -0.229), (2000, -0.072), (3000, -0.034), (4000, 0.004), (5000, -0.034)];

pub fn t_psi(x: u64) -> Option<f64> {
    T_PSI.iter().find(|e| e.0 == x).map(|e| e.1)
}

pub fn l2(x: u64) -> Option<f64> {
    L2.iter().find(|e| e.0 == x).map(|e| e.1)
}

/// Column of [`TABLE1_X`] holding `x`.
pub fn table1_column(x: u64) -> Option<usize> {
    TABLE1_X.iter().position(|&c| c == x)
}
