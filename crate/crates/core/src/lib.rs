pub mod cli;
pub mod criteria;
pub mod diagrams;
pub mod exactalg;
pub mod yangian;
