//! Runtime code polymorphism.
//!
//! `polygen` turns each function marked `poly` into three parts: a wrapper
//! with the original name, a specialized generator (SGPC) that writes a
//! fresh randomized instance of the function into a buffer, and the data
//! the generator needs. The generator is straight-line guest code that
//! materializes instruction descriptors and hands them to the shared
//! runtime in `guest/runtime.s`. [`reference`] reproduces the runtime's
//! output on the host.

pub mod config;
pub mod emit;
pub mod liveness;
pub mod plan;
pub mod reference;
pub mod variants;
pub mod windows;

pub use config::{ConfigError, PolyConfig, Transforms};
pub use emit::{buffer_name, ctx_name, emit_sgpc, polygen, sgpc_name, PolyError, PolyTargets, RUNTIME_SRC};
pub use plan::{build_plan, Action, Entry, Plan, Template};
pub use reference::{decrypt_instance, generate, host_reference_generate, GenError, Instance, NoiseStats};
pub use variants::{pick_variant, Family};
pub use windows::find_windows;
