//! Fibonacci numbers modulo `m`, Pisano periods, and a complete
//! classification of the arithmetic-progression subsequences
//! `F_{k + rj} mod 10` of the mod-10 period.
//!
//! The number-theory kernels ([`modfib`], [`complete::unit_group`],
//! [`word`]) are generic over the unsigned word type; the aliases below fix
//! that word to `u64`. The mod-10 classification modules work on small
//! concrete integers.

pub mod complete;
pub mod error;
pub mod modfib;
pub mod oracle;
pub mod quasi;
pub mod render;
pub mod subseq;
pub mod verify;
pub mod word;

pub use complete::{
    brute_force_shift, compute_shift, first_zero_index, index_log, unit_group, Direction,
    ShiftCertificate, UnitGroupOf,
};
pub use error::{Error, Result};
pub use modfib::{
    antipodal_sum, fib10, fib_mod, lucas_mod, pisano_period, residue_character, PisanoPeriodOf,
    ResidueCharacter, ResidueOf,
};
pub use quasi::{predict_quasi, verify_quasi, QuasiClass, QuasiPrediction};
pub use render::{build_scene, render_frames, render_svg, CircleLayout, DiagramScene};
pub use subseq::{
    is_cyclic_shift, star_polygon, subsequence_period, tuple_d, tuple_p, tuple_s, DiagramType,
    StarPolygon, SubsequencePeriod, SubsequenceSpec,
};
pub use word::ModWord;

pub type Residue = ResidueOf<u64>;
pub type PisanoPeriod = PisanoPeriodOf<u64>;
pub type UnitGroup = UnitGroupOf<u64>;
