//! Group presentations, free-group words, Fox calculus and the
//! presentations attached to diagrams and symmetric unions.

pub mod group;
pub mod symun;
pub mod twobridge;
pub mod wirtinger;
pub mod word;

pub use group::{parse_word, GeneratorMap, GroupPresentation};
pub use symun::{build_symun_presentation, lift_to_pieces, partial_wirtinger, SymUnionPresentations};
pub use twobridge::two_bridge;
pub use wirtinger::{cut_diagram, wirtinger, CutDiagram, Event, Passage};
pub use word::{fox_derivative, GroupRingElt, Letter, Word};
