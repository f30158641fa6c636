pub mod asm;
pub mod binenc;
pub mod cfgprep;
pub mod cipher;
pub mod pipeline;
pub mod poly;
pub mod sca;
pub mod sim;
