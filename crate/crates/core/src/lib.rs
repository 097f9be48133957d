pub mod batch;
pub mod draft;
pub mod error;
pub mod frames;
#[cfg(feature = "live")]
pub mod http;
pub mod metrics;
pub mod naming;
pub mod owl;
pub mod rdf;
pub mod source;
pub mod vocab;
