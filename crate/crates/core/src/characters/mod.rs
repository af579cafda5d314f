//! Irreducible characters of the symmetric group: partitions, dimensions,
//! a general Murnaghan–Nakayama evaluator, and closed forms for one-hook
//! shapes.

mod hooks;
mod murnaghan_nakayama;
mod partition;
mod table;

pub use hooks::{
    chi_hook_general, chi_hook_on_involution, chi_hook_on_ncycle, f_weight, q_weight, signed_f_weight_via_q,
    HookShape,
};
pub use murnaghan_nakayama::{
    mn_character, mn_character_for_composition, rim_hook_removals, rim_hook_tableaux, RimHook, RimHookTableau,
};
pub use partition::{dimension, partitions_of, Partition};
pub use table::CharacterTable;
