//! Nerves, generalized wedges, cyclic bar constructions and the comparison maps.

pub mod comparison;
pub mod cyclic;
pub mod nerve;
pub mod shear;
pub mod wedge;

pub use comparison::{intermediate_t, map_u, map_v, map_w, naturality_check, Comparison, IntermediateT};
pub use cyclic::{cyclic_bar, CyclicBar, CyclicBarOfWedge, CyclicWedge, PairElem, TriElem};
pub use nerve::{nerve, tuples, Nerve};
pub use shear::{shear_map, shear_record, Shear, Side};
pub use wedge::{
    composable_tuples, generalized_wedge, wedge_action, wedge_tuples, DiscreteWedge, PointedWedge,
    WedgeRow,
};
