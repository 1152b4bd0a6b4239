pub mod abgrp;
pub mod cli;
pub mod fixtures;
pub mod obstruction;
pub mod perm;
