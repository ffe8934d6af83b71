//! The published equations, transcribed term for term.
//!
//! Line breaks follow the printed displays so the text can be compared with
//! the source by eye. Nothing here is evaluated; `Catalog` parses it once.
//! Variables: `x, y, z` stand for `i1, i2, i3`; `u, v` parametrize the curves
//! `y² = (4v²x³ + v²x² + 2vx + 1)(v²x³ + uv·x² + vx + 1)`; `r1, r2` are the
//! cubic-pair invariants.

/// The surface of curves with (2,2)-split Jacobian, in `x, y, z`.
pub const S2: &str = "
    -27*x^6 - 9459597312000*z^2*x^2 + 20639121408000*z^2*y + 111451255603200*z^2*x - 240734712102912*z^2
    - 55240704*z*x^4 - 18*y^2*x^4 - 8294400*z*y^2*x^2 - 47278080*z*y*x^3 - 264180754022400000*z^3
    - 2866544640000*z^2*y*x + 2*x^6*y - 4*x^3*y^3 + 9*x^7 + 331776*z*x^5 + 107495424*z*y*x^2 - 27*y^4 + 9*x*y^4
    - 52254720*z*y^2*x + 2*y^5 + 161243136*z*y^2 + 161243136*z*x^3 - 12441600*z*y^3 + 54*x^3*y^2
";

/// Numerator of the z-elimination `z = −φ1/(82944·φ2)`.
pub const PHI1: &str = "
    104976*y^2 + 5211*x^5 - 48600*y^2*x + 69984*y*x^2 + 3375*y*x^4 + 450*x^3*y^2
    - 50544*x^4 - 675*x^2*y^2 + 104976*x^3 + 2025*x*y^3 - 10800*y^3 + 20*x^6 + 250*y^4
    - 37800*x^3*y
";

/// Denominator of the z-elimination.
pub const PHI2: &str = "
    1250*y*x^2 - 121500*x*y - 3779136 - 359100*x^2 - 11250*y^2 + 6375*x^3
    + 421200*y + 2274480*x
";

/// Singular component carrying the D4 locus.
pub const C1: &str = "
    100*y^2 - 1458*y + 540*x*y - 243*x^2 + 80*x^3
";

/// Singular component carrying the D6 locus.
pub const C2: &str = "
    3888*x - 1188*x^2 + 5*x^3 + 432*y - 360*x*y - 25*y^2
";

/// First equation of the third singular system.
pub const C3_FIRST: &str = "
    50*x^4 - 7515*x^3 - 825*y*x^2 + 20412*x^2 - 23490*x*y - 4050*y^2 + 52488*y
";

/// Second equation of the third singular system.
pub const C3_SECOND: &str = "
    125*y^2 - 1620*y + 1125*x*y - 5832*x + 1890*x^2 + 25*x^3
";

/// Auxiliary relation giving y in terms of x on the third system.
pub const C3_Y: &str = "
    (1/75)*(408240*x - 33525*x^2 - 944784 + 250*x^3)/(-864 + 55*x)
";

/// Cubic in x attached to the third system.
pub const C3_CUBIC: &str = "
    125*x^3 - 9450*x^2 + 247860*x - 944784
";

/// The surface of curves with (3,3)-split Jacobian, reduced modulo 5.
pub const S3_MOD5: &str = "
    x^20 + 3*x^19 + 3*x^18*y + 4*x^17*y^2 + 3*x^18 + 4*x^17*z + 2*x^16*y^2 + 2*x^16*y*z + 2*x^15*y^3 + 4*x^16*z + 2*x^15*y^2
    + 4*x^15*y*z + x^15*z^2 + x^13*y^3*z + 3*x^14*y*z + x^13*y^2*z + x^13*y*z^2 + 4*x^12*y^3*z + 4*x^12*y^2*z^2 + x^11*y^4*z + x^10*y^5*z
    + 4*x^13*z^2 + x^12*y^2*z + 4*x^12*z^3 + 3*x^11*y^3*z + 3*x^11*y^2*z^2 + 2*x^11*y*z^3 + 4*x^10*y^4*z + 2*x^10*y^3*z^2
    + 2*x^9*y^5*z + 2*x^9*y^4*z^2 + 2*x^8*y^6*z + x^7*y^7*z + 4*x^5*y^10 + 3*x^12*z^2 + 3*x^11*y*z^2 + 3*x^11*z^3 + 4*x^10*y*z^3 + 4*x^9*y^4*z
    + 3*x^9*y^3*z^2 + 2*x^9*y^2*z^3 + 3*x^8*y^5*z + 4*x^8*y^4*z^2 + 3*x^8*y^3*z^3 + 2*x^7*y^6*z + 2*x^7*y^5*z^2 + 3*x^5*y^8*z + 2*x^4*y^10 + x^4*y^9*z
    + 2*x^3*y^11 + x^2*y^12 + 2*x^10*z^3 + 3*x^9*y^2*z^2 + 4*x^9*y*z^3 + x^9*z^4 + 4*x^8*y^3*z^2 + 4*x^8*y^2*z^3 + 2*x^8*y*z^4 + 3*x^7*y^4*z^2
    + 2*x^6*y^6*z + 4*x^6*y^5*z^2 + 2*x^6*y^4*z^3 + 3*x^5*y^7*z + x^5*y^5*z^3 + 4*x^4*y^7*z^2 + 2*x^3*y^10 + 3*x^3*y^9*z + 4*x^3*y^8*z^2 + 3*x*y^12
    + 4*x*y^11*z + 3*y^13 + 4*x^9*z^3 + x^8*y*z^3 + 3*x^8*z^4 + 2*x^7*y^2*z^3 + 2*x^7*y*z^4 + 2*x^7*z^5 + x^6*y^4*z^2 + x^6*y^3*z^3 + 3*x^6*y^2*z^4
    + x^6*y*z^5 + 4*x^5*y^5*z^2 + x^5*y^4*z^3 + x^5*y^3*z^4 + x^4*y^6*z^2 + 2*x^4*y^5*z^3 + x^4*y^4*z^4 + 3*x^3*y^6*z^3 + 3*x^2*y^9*z + 3*x^2*y^8*z^2
    + 4*x^2*y^7*z^3 + 4*x*y^10*z + 3*y^12 + 2*y^11*z + x^7*z^4 + x^6*y^2*z^3 + 3*x^6*y*z^4 + 3*x^6*z^5 + 4*x^5*y^3*z^3 + x^5*y^2*z^4 + 3*x^5*y*z^5
    + 3*x^5*z^6 + 2*x^4*y^4*z^3 + 4*x^4*y^3*z^4 + x^4*y^2*z^5 + 4*x^3*y^4*z^4 + 3*x^3*y^3*z^5 + 2*x^2*y^7*z^2 + 4*x^2*y^6*z^3 + 2*x^2*y^5*z^4
    + 2*x*y^8*z^2 + 3*x*y^7*z^3 + 3*y^10*z + 3*y^9*z^2 + 2*x^6*z^4 + 3*x^5*y*z^4 + 3*x^5*z^5 + x^4*y^2*z^4 + 3*x^4*z^6 + 2*x^3*y^3*z^4
    + 3*x^3*y^2*z^5 + 3*x^2*y^5*z^3 + 3*x^2*y^4*z^4 + 3*x*y^6*z^3 + 2*x*y^5*z^4 + 2*x*y^4*z^5 + 2*y^7*z^3 + y^5*z^5 + 2*x^4*z^5 + x^3*y*z^5
    + 3*x^3*z^6 + 2*x^2*y^3*z^4 + 2*x^2*y^2*z^5 + 2*x^2*y*z^6 + 2*x*y^4*z^4 + 3*y^5*z^4 + 4*y^4*z^5 + 2*x^3*z^5 + 3*x^2*y*z^5 + 4*x^2*z^6 + x*y^2*z^5
    + 3*y^2*z^6 + x*z^6 + 3*y^2*z^5 + 4*z^7 + 3*z^6
";

/// Quadratic factor of the θ denominators; its zero set is the J2 = 0 locus.
pub const THETA_QUADRATIC: &str = "
    -405 + 252*u + 4*u^2 - 54*v - 12*u*v + 3*v^2
";

/// θ(u, v) = (i1, i2, i3). `Q` abbreviates `THETA_QUADRATIC` and is
/// substituted when the catalog is parsed.
pub const THETA_I1: &str = "
    144/(v*Q^2)*(1188*u^3 - 8424*u*v + u^4*v - 24*u^4
    + 14580*v - 66*u^3*v + 138*u*v^2 + 297*u^2*v + 945*v^2 - 36*v^3 + 9*u^2*v^2)
";
pub const THETA_I2: &str = "
    -864/(v^2*Q^3)*(-81*v^3*u^4 + 2*u^6*v^2 + 234*u^5*v^2
    + 3162402*u*v^2 - 21384*v^3*u + 26676*v^4 - 473121*v^3 - 72*u^6*v - 5832*v^4*u + 14850*v^3*u^2
    - 72*v^3*u^3 + 324*v^4*u^2 - 650268*u^3*v - 5940*u^3*v^2 - 3346110*v^2 + 432*u^6 - 1350*u^4*v^2
    + 136080*u^4*v - 7020*u^5*v - 307638*u^2*v^2)
";
pub const THETA_I3: &str = "
    -243*(v - 27)*(4*u^3 - u^2*v - 18*u*v + 4*v^2 + 27*v)^3/(v^3*Q^5)
";

/// r1 and r2 of the cubic pair as functions of (u, v).
pub const EQR_R1: &str = "
    27*v*(v - 9 - 2*u)^3/(4*v^2 - 18*u*v + 27*v - u^2*v + 4*u^3)
";
pub const EQR_R2: &str = "
    -1296*v*(v - 9 - 2*u)^4/((v - 27)*(4*v^2 - 18*u*v + 27*v - u^2*v + 4*u^3))
";

/// Quadratic factor of the ρ denominators; also the J2 = 0 locus in (r1, r2).
pub const RHO_QUADRATIC: &str = "
    -1152*r2^2 + 96*r2*r1 + r1^2
";

/// ρ(r1, r2) = (i1, i2, i3). `P` abbreviates `RHO_QUADRATIC`.
pub const RHO_I1: &str = "
    9/4*(13824*r1^3*r2^2 + 442368*r1^2*r2^3 + 5308416*r1*r2^4 + 192*r1^4*r2 + r1^5 + 786432*r1*r2^3 + 9437184*r2^4)/(r1*P^2)
";
pub const RHO_I2: &str = "
    27/(8*r1^2*P^3)*(79626240*r1^4*r2^4 - 4076863488*r1^2*r2^5 + 34560*r1^6*r2^2
    + 12230590464*r1^2*r2^6 + 32614907904*r1*r2^6 + 14495514624*r2^6 + 288*r1^7*r2 + 2211840*r1^5*r2^3
    + r1^8 - 212336640*r1^3*r2^4 + 1528823808*r1^3*r2^5 - 2359296*r1^4*r2^3)
";
pub const RHO_I3: &str = "
    -521838526464*r2^9/(r1^2*P^5)
";

/// System in (r1, r2) whose solutions give the singular points of the (3,3) surface.
pub const R1R2_SYSTEM_1: &str = "
    3*r1^8 + 720*r1^7*r2 + 69120*r1^6*r2^2 + 2048*r1^5*r2^2 + 3317760*r1^5*r2^3 + 79626240*r1^4*r2^4 - 417792*r1^4*r2^3
    - 24772608*r1^3*r2^4 + 764411904*r1^3*r2^5 - 113246208*r1^2*r2^5 + 50331648*r1*r2^5
    - 5435817984*r1*r2^6 - 2415919104*r2^6
";
pub const R1R2_SYSTEM_2: &str = "
    9*r1^5 + 1296*r1^4*r2 + 62208*r1^3*r2^2 - 10240*r1^2*r2^2 + 995328*r1^2*r2^3 + 786432*r1*r2^3 - 2359296*r2^4
";
pub const R1R2_SYSTEM_3: &str = "
    9*r1^8 + 2160*r1^7*r2 + 207360*r1^6*r2^2 + 9953280*r1^5*r2^3 + 38912*r1^5*r2^2 + 238878720*r1^4*r2^4
    - 3735552*r1^4*r2^3 + 2293235712*r1^3*r2^5 - 247726080*r1^3*r2^4 + 905969664*r1^2*r2^5
    + 201326592*r1*r2^5 - 5435817984*r1*r2^6 - 4831838208*r2^6
";

/// Curve in the (u, v)-plane on which the Jacobian of θ drops rank.
pub const ISO1: &str = "
    8*v^3 + 27*v^2 - 54*u*v^2 - u^2*v^2 + 108*u^2*v + 4*u^3*v - 108*u^3
";

/// J2 = 0 in (r1, r2).
pub const J2_LOCUS: &str = "
    -1152*r2^2 + 96*r1*r2 + r1^2
";

/// Listed solutions of the third singular system, as (x, y).
pub const C3_POINTS: [[&str; 2]; 3] = [["0", "729/50"], ["81/20", "-729/200"], ["-36/5", "1512/25"]];

/// The point of the (2,2) surface singled out as lying on the variety.
pub const S2_SPECIAL_POINT: [&str; 3] = ["0", "729/50", "729/12800000"];

/// Solutions (r1, r2) of the three-equation system.
pub const R1R2_POINTS: [[&str; 2]; 3] = [
    ["-512/2187", "-256/6561"],
    ["2/243", "1/11664"],
    ["-4000/2187", "2500/6561"],
];

/// Listed singular points of the (3,3) surface, with the automorphism groups
/// assigned to them "respectively".
pub const T3_POINTS: [[&str; 3]; 3] = [
    ["-8019/20", "-1240029/200", "-531441/100000"],
    ["81", "-5103/25", "-729/12500"],
    ["729/2116", "1240029/97336", "531441/13181630464"],
];
pub const T3_GROUPS: [&str; 3] = ["D4", "D4", "D6"];

/// Rows of the table of exceptional points where det Jac(θ) = 0:
/// (u, v) points, printed (i1, i2, i3) or `None` for the degenerate row,
/// automorphism group, number of degree-3 elliptic subcovers.
pub struct Table1Row {
    pub points: &'static [[&'static str; 2]],
    pub invariants: Option<[&'static str; 3]>,
    pub aut: Option<&'static str>,
    pub e3: u32,
}

pub const TABLE1: [Table1Row; 4] = [
    Table1Row {
        points: &[["-7/2", "2"]],
        invariants: None,
        aut: None,
        e3: 0,
    },
    Table1Row {
        points: &[["-775/8", "125/96"], ["25/2", "250/9"]],
        invariants: Some(["-8019/20", "-1240029/200", "531441/100000"]),
        aut: Some("D4"),
        e3: 2,
    },
    Table1Row {
        points: &[
            ["27-77/2*sqrt(-1)", "23+77/9*sqrt(-1)"],
            ["27+77/2*sqrt(-1)", "23-77/9*sqrt(-1)"],
        ],
        invariants: Some(["729/2116", "1240029/97336", "531441/13181630464"]),
        aut: Some("D4"),
        e3: 2,
    },
    Table1Row {
        points: &[
            ["-15+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"],
            ["-15-35/8*sqrt(5)", "25/2-35/6*sqrt(5)"],
        ],
        invariants: Some(["81", "-5103/25", "-729/12500"]),
        aut: Some("D6"),
        e3: 2,
    },
];
