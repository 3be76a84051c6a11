//! L -> A(L) -> L(A(L)) on the eight-element Boolean algebra, compared
//! table by table.

use oml_core::correspondence::induced_candidate;
use oml_core::fixtures::boolean;
use oml_core::{round_trip_check, sasaki_groupoid, serialize_structure, Structure};

fn main() -> Result<(), oml_core::Error> {
    let l = boolean(3);
    let a = sasaki_groupoid(&l)?;
    let back = induced_candidate(&a);

    println!("{}", serialize_structure(&Structure::from(a.clone())));
    println!("L(A(L)) == L: {}", back == l);
    println!("{}", round_trip_check(&Structure::from(l))?);
    Ok(())
}
