//! Exact symbolic and numeric differential geometry of the nilpotent Lie
//! group Nil⁴ with its standard left-invariant metric.
//!
//! * [`scalar`]: exact rationals, polynomials, rational functions, jets
//! * [`geometry`]: group law, frame, metric, connection, curvature
//! * [`hypersurface`]: second fundamental form, shape operator, cubic form,
//!   Codazzi and Gauss equations, Frobenius integrability
//! * [`classify`]: classification of Codazzi hypersurfaces
//! * [`minimal`]: minimality of t-dependent frame families and graphs
//! * [`cli`]: JSON-emitting command line

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod geometry;
pub mod hypersurface;
pub mod minimal;
pub mod reference;
pub mod report;
pub mod scalar;

/// Runs `f` on a rayon pool capped at `NILGEO_THREADS` workers when set.
pub(crate) fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let threads = std::env::var("NILGEO_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match threads.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}
