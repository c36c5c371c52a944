//! Certified word rewriting for Stallings' group
//!
//! ```text
//! S = ⟨ a, b, c, d, s | [a,c], [a,d], [b,c], [b,d],
//!                       s^a = s^b = s^c = s^d ⟩
//! ```
//!
//! Every rewriting procedure returns a [`trace::Trace`] that replays, move
//! by move, from its input to its output; the number of relator moves is the
//! cost. [`filling::alg5_fill`] reduces any null-homotopic word to the empty
//! word with cost at most `160nk² + 309n² + 288n³/k`.

pub mod filling;
pub mod group;
pub mod harness;
pub mod metrics;
pub mod oracle;
pub mod presentation;
pub mod rewriting;
pub mod trace;
pub mod word;

pub use word::{Base, Generator, Interval, Sign, Word};
