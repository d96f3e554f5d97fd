pub mod cfrac;
pub mod plumbing;
pub mod exactnum;
