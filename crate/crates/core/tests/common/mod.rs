#![allow(dead_code)]

use brauer_core::FiniteGroup;

/// The bundled verification catalog: every cyclic group up to order 60,
/// the dihedral groups D3..D12, Q8, small symmetric/alternating groups,
/// elementary products, the split metacyclic test subjects and C3 x S3.
pub fn catalog() -> Vec<FiniteGroup> {
    let mut groups = Vec::new();
    for n in 1..=60 {
        groups.push(FiniteGroup::cyclic(n).unwrap());
    }
    for n in 3..=12 {
        groups.push(FiniteGroup::dihedral(n).unwrap());
    }
    groups.push(FiniteGroup::quaternion8());
    groups.push(FiniteGroup::symmetric(3).unwrap());
    groups.push(FiniteGroup::symmetric(4).unwrap());
    groups.push(FiniteGroup::alternating(4).unwrap());
    groups.push(FiniteGroup::alternating(5).unwrap());

    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
    groups.push(v4.clone());
    groups.push(FiniteGroup::direct_product(&c2, &c4).unwrap());
    groups.push(FiniteGroup::direct_product(&c3, &c3).unwrap());
    groups.push(FiniteGroup::direct_product(&c2, &v4).unwrap());

    for (n, m, a) in [(7, 3, 2), (5, 4, 2), (5, 4, 3), (11, 5, 3), (13, 3, 3), (19, 9, 4), (3, 4, 2)] {
        groups.push(FiniteGroup::semidirect_cyclic(n, m, a).unwrap());
    }

    let s3 = FiniteGroup::symmetric(3).unwrap();
    groups.push(FiniteGroup::direct_product(&c3, &s3).unwrap());
    groups
}

pub fn catalog_up_to(max_order: usize) -> Vec<FiniteGroup> {
    catalog().into_iter().filter(|g| g.order() <= max_order).collect()
}
