pub mod arith;
pub mod chartab;
pub mod classify;
pub mod ffgrp;
pub mod lie;
pub mod oracle;
pub mod unipdeg;
