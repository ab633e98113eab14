//! Exact symbolic core of braidkit: scalars, noncommutative rewriting,
//! presentations, braided Hopf structure, pairings and actions.
#![no_std]
extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod braidsearch;
pub mod duality;
pub mod hopf;
pub mod ncpoly;
pub mod presentations;
pub mod scalars;
pub mod spheres;
pub mod tensor;
