//! Formal precycle/twisted-cycle bookkeeping: descriptors, ledgers, HVC
//! classification, form-restriction vanishing, and the completion algorithms.

pub mod complete;
pub mod descriptor;
pub mod epsilon;
pub mod forms;
pub mod hvc;
pub mod precycle;

pub use complete::{
    complete_hyperplane_precycle, complete_on_product, CompletionOutcome, CompletionStep,
    HyperplaneInstance, NamedPoint, ProductDivisorPoint, ProductInstance,
};
pub use descriptor::{FactorContent, SubvarietyDescriptor, SubvarietyKind};
pub use epsilon::{epsilon_family, EpsilonFamily};
pub use forms::{restriction_vanishes, FormDescriptor, FormTerm, Leg};
pub use hvc::{classify_hvc, HvcClassification, HvcComponent};
pub use precycle::{CycleTable, DivisorEntry, Ledger, LedgerTerm, Precycle};
