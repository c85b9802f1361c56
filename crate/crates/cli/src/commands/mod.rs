pub mod help_check;
pub mod lie;
pub mod selftest;
pub mod sieve;
pub mod tableaux;
pub mod tree_check;
pub mod verdict;
