// Lattice polygons: Pick's theorem, Minkowski sums, mixed area.

use monoideal::lattice_geom::{
    boundary_lattice_count, doubled_area, interior_lattice_count, minkowski_sum, mixed_area,
};
use monoideal::oracle::polygon_point_census;
use monoideal::LatticePolygon;

fn main() -> monoideal::Result<()> {
    let l_shape = LatticePolygon::new([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)].map(Into::into))?;
    let area2 = doubled_area(&l_shape)?.value();
    let (b, i) = (boundary_lattice_count(&l_shape)?, interior_lattice_count(&l_shape)?);
    println!("L-shape: 2A = {area2}, B = {b}, I = {i}, census = {:?}", polygon_point_census(&l_shape));
    assert_eq!(area2, 2 * i + b - 2);

    let tri = LatticePolygon::new([(0, 0), (2, 0), (0, 3)].map(Into::into))?;
    let square = LatticePolygon::new([(0, 0), (1, 0), (1, 1), (0, 1)].map(Into::into))?;
    let sum = minkowski_sum(&tri, &square)?;
    println!("triangle + square = {:?}", sum.vertices().iter().map(|p| (p.u, p.v)).collect::<Vec<_>>());
    let mv = mixed_area(&tri, &square)?;
    println!("doubled mixed area = {mv}");
    for (m, n) in [(1, 1), (2, 1), (3, 2)] {
        let s = minkowski_sum(&tri.scale(m)?, &square.scale(n)?)?;
        let expected = m * m * doubled_area(&tri)?.value() + n * n * doubled_area(&square)?.value() + m * n * mv;
        assert_eq!(doubled_area(&s)?.value(), expected);
        println!("2·area({m}T + {n}S) = {expected}");
    }
    Ok(())
}
