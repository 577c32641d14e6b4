//! The five ranking methods. Every method returns scores where higher is
//! better.

pub mod ahp;
pub mod msaw;
pub mod saw;
pub mod topsis;
pub mod wpm;
