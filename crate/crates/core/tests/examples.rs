//! Worked examples through the public API.

use srep_core::cayley;
use srep_core::ferus;
use srep_core::orbits::{self, OrbitSpec, Rule};
use srep_core::pairdb::{Flag, PairDb, Params, SymmetricPair};
use srep_core::rootsys::lowest_root;
use srep_core::{
    Error, Family, LexOrder, RootClass, RootSystem, RootSystemType, RootVec, WolfClass, Q,
};

fn sys(family: Family, rank: usize) -> RootSystem {
    RootSystem::build(RootSystemType::new(family, rank).unwrap()).unwrap()
}

fn v(c: &[i64]) -> RootVec {
    RootVec::from_ints(c)
}

fn pair(key: &str, params: Params) -> SymmetricPair {
    let db = PairDb::embedded().unwrap();
    db.lookup(key).unwrap().instantiate(params).unwrap()
}

#[test]
fn building() {
    let g2 = sys(Family::G2, 2);
    assert_eq!(g2.positive_roots().len(), 6);
    assert_eq!(
        g2.simple_coords(g2.highest_root()).unwrap(),
        vec![Q::from(3), Q::from(2)]
    );
    let short = g2.short_roots();
    assert_eq!(short.len(), 3);
    assert_eq!(g2.highest_root().norm_sq() / short[0].norm_sq(), Q::from(3));

    let bc2 = sys(Family::BC, 2);
    let mut expected = vec![
        v(&[1, 0]),
        v(&[0, 1]),
        v(&[2, 0]),
        v(&[0, 2]),
        v(&[1, 1]),
        v(&[1, -1]),
    ];
    let mut got = bc2.positive_roots().to_vec();
    expected.sort_by(|a, b| bc2.order().compare(a, b));
    got.sort_by(|a, b| bc2.order().compare(a, b));
    assert_eq!(got, expected);

    assert_eq!(sys(Family::A, 1).positive_roots().len(), 1);
}

#[test]
fn membership_and_classes() {
    let c2 = sys(Family::C, 2);
    assert!(c2.is_root(&v(&[2, 0])).unwrap());
    assert!(!c2.is_root(&v(&[3, 0])).unwrap());
    assert!(!sys(Family::B, 3).is_root(&v(&[1, 1, 1])).unwrap());
    assert!(matches!(
        c2.is_root(&v(&[1, 0, 0])),
        Err(Error::DimensionMismatch { .. })
    ));

    let a3 = sys(Family::A, 3);
    assert_eq!(a3.long_roots().len(), 6);
    assert!(a3.short_roots().is_empty());

    let bc2 = sys(Family::BC, 2);
    let mut long = bc2.long_roots();
    long.sort_by(|a, b| bc2.order().compare(a, b));
    assert_eq!(long, vec![v(&[0, 2]), v(&[2, 0])]);
}

#[test]
fn wolf_classes() {
    for (family, rank) in [(Family::E7, 7), (Family::B, 3), (Family::BC, 2)] {
        let s = sys(family, rank);
        assert_eq!(s.wolf_class(s.highest_root()).unwrap(), WolfClass::Highest);
    }
    let b3 = sys(Family::B, 3);
    assert_eq!(b3.highest_root(), &v(&[1, 1, 0]));
    assert_eq!(
        b3.wolf_class(&v(&[0, 0, 1])).unwrap(),
        WolfClass::Orthogonal
    );
    let bc2 = sys(Family::BC, 2);
    assert_eq!(bc2.highest_root(), &v(&[2, 0]));
    assert_eq!(bc2.wolf_class(&v(&[1, 0])).unwrap(), WolfClass::Half);
    assert!(bc2.wolf_class(&v(&[3, 0])).is_err());
}

#[test]
fn lowest_roots() {
    let order = LexOrder::standard(2);
    assert_eq!(
        lowest_root(&[v(&[1, 0]), v(&[0, 1])], &order).unwrap(),
        v(&[0, 1])
    );
    assert!(matches!(lowest_root(&[], &order), Err(Error::Empty(_))));
    let a2 = sys(Family::A, 2);
    let low = lowest_root(a2.positive_roots(), a2.order()).unwrap();
    assert!(a2.simple_roots().contains(&low));
}

#[test]
fn database_lookups() {
    let db = PairDb::embedded().unwrap();
    let e6 = db
        .lookup_gk("e6", "f4")
        .unwrap()
        .instantiate(Params::NONE)
        .unwrap();
    assert_eq!(e6.system().rstype().to_string(), "A2");
    assert!(e6
        .system()
        .positive_roots()
        .iter()
        .all(|r| e6.multiplicity(r).unwrap() == 8));

    let a = pair("su(p+1)|so(p+1)", Params::p(4));
    assert!(a
        .system()
        .positive_roots()
        .iter()
        .all(|r| a.multiplicity(r).unwrap() == 1));

    let g = db.lookup_gk("g2 + g2", "g2").unwrap();
    assert!(g.has_flag(Flag::GroupManifold));
    let g = g.instantiate(Params::NONE).unwrap();
    assert!(g
        .system()
        .positive_roots()
        .iter()
        .all(|r| g.multiplicity(r).unwrap() == 2));

    let sp = pair("sp(2p+n)|sp(p)+sp(p+n)", Params::pn(3, 2));
    assert_eq!(sp.multiplicity(&v(&[1, 0, 0])).unwrap(), 8);
    assert_eq!(sp.multiplicity(&v(&[1, -1, 0])).unwrap(), 4);
    assert_eq!(sp.multiplicity(&v(&[2, 0, 0])).unwrap(), 3);

    let so = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(3, 2));
    assert_eq!(so.multiplicity(&v(&[0, 0, 1])).unwrap(), 2);
    assert_eq!(so.multiplicity(&v(&[0, 1, 1])).unwrap(), 1);

    let b = pair("so(2p+1)^2|so(2p+1)", Params::p(3));
    assert!(b
        .system()
        .positive_roots()
        .iter()
        .all(|r| b.multiplicity(r).unwrap() == 2));
}

#[test]
fn orbit_dimensions() {
    for p in 2..=5 {
        for n in 1..=3 {
            let so = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(p, n));
            let h = so.system().highest_root().clone();
            assert_eq!(so.orbit_dimension(&h).unwrap(), (4 * p + 2 * n - 7) as u64);
        }
    }
    let e8 = pair("e8|so(16)", Params::NONE);
    assert_eq!(e8.orbit_dimension(e8.system().highest_root()).unwrap(), 57);
    let regular = e8
        .system()
        .dual_basis()
        .iter()
        .fold(RootVec::zero(8), |acc, w| &acc + w);
    assert_eq!(
        e8.orbit_dimension(&regular).unwrap(),
        e8.total_multiplicity()
    );
}

#[test]
fn chamber_faces() {
    let so = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(3, 1));
    let basis = so.system().dual_basis();
    for (i, w) in basis.iter().enumerate() {
        assert_eq!(so.chamber_face(w).unwrap().delta, vec![i]);
    }
    let regular = &basis[0] + &(&basis[1] + &basis[2]);
    let face = so.chamber_face(&regular).unwrap();
    assert_eq!(face.delta, vec![0, 1, 2]);
    assert!(face.orthogonal.is_empty());

    let b2 = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(2, 1));
    assert_eq!(
        b2.chamber_face(&v(&[1, 0])).unwrap().orthogonal,
        vec![v(&[0, 1])]
    );
}

#[test]
fn folding_and_parallel_roots() {
    let b2 = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(2, 1));
    assert_eq!(orbits::weyl_fold(&b2, &v(&[1, 0])).unwrap(), v(&[1, 0]));
    assert_eq!(orbits::weyl_fold(&b2, &v(&[-1, 0])).unwrap(), v(&[1, 0]));

    let bc = pair("su(2p+n)|su(p)+su(p+n)+r", Params::pn(2, 1));
    assert_eq!(orbits::parallel_root(&bc, &v(&[3, 0])), Some(v(&[2, 0])));

    let a2 = pair("su(p+1)|so(p+1)", Params::p(2));
    let s = a2.system().simple_roots();
    let sum = &s[0] + &s[1];
    assert_eq!(&sum, a2.system().highest_root());
    assert_eq!(orbits::parallel_root(&a2, &sum), Some(sum.clone()));
    let interior = &a2.system().dual_basis()[0] + &a2.system().dual_basis()[1];
    let interior = interior.add_scaled(Q::from(1), &a2.system().dual_basis()[0]);
    assert_eq!(orbits::parallel_root(&a2, &interior), None);
}

#[test]
fn sufficient_conditions() {
    let c2 = sys(Family::C, 2);
    assert!(!orbits::cond_b(&c2, &v(&[1, 1])).unwrap());
    let witness = orbits::cond_b_witness(&c2, &v(&[1, 1])).unwrap().unwrap();
    assert_eq!(witness, v(&[1, -1]));

    let g2 = sys(Family::G2, 2);
    for lam in g2.short_roots() {
        assert!(orbits::cond_a(&g2, &lam).unwrap() && orbits::cond_b(&g2, &lam).unwrap());
    }
    for family in Family::ALL {
        let rank = family.fixed_rank().unwrap_or(3);
        let s = sys(family, rank);
        let d = s.highest_root();
        assert!(
            orbits::cond_a(&s, d).unwrap() && orbits::cond_b(&s, d).unwrap(),
            "{family}"
        );
    }
}

#[test]
fn classification() {
    let g2 = orbits::classify_spec(&pair("g2|so(4)", Params::NONE), &OrbitSpec::Long).unwrap();
    assert_eq!((g2.l, g2.r, g2.nullity), (5, 4, 1));
    let e6 = orbits::classify_spec(&pair("e6|f4", Params::NONE), &OrbitSpec::Long).unwrap();
    assert_eq!((e6.l, e6.r, e6.nullity), (24, 16, 8));

    let sp = pair("sp(2p+n)|sp(p)+sp(p+n)", Params::pn(2, 1));
    let rep = orbits::classify(&sp, &v(&[2, 0])).unwrap();
    assert_eq!((rep.l, rep.r, rep.nullity), (15, 12, 3));
    assert_eq!(rep.rule, Rule::LongRoot);

    let so = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(3, 1));
    let rep = orbits::classify(&so, &v(&[1, 0, 0])).unwrap();
    assert!(!rep.degenerate);
    assert_eq!(rep.rule, Rule::ShortRootNonG2);
    assert_eq!(rep.root_class, Some(RootClass::Short));
}

#[test]
fn principal_curvatures() {
    let so = pair("so(2p+n)|so(p)+so(p+n)", Params::pn(2, 2));
    let h = v(&[1, 1]);
    let zero = orbits::principal_curvatures(&so, &h, &v(&[0, 0])).unwrap();
    assert_eq!(zero.entries.len(), 1);
    assert_eq!(zero.entries[0].value, Q::from(0));
    assert_eq!(
        zero.entries[0].multiplicity,
        so.orbit_dimension(&h).unwrap()
    );

    let xi = v(&[1, -1]);
    let spectrum = orbits::principal_curvatures(&so, &h, &xi).unwrap();
    let tangent_kernel: u64 = so
        .system()
        .positive_roots()
        .iter()
        .filter(|mu| mu.inner(&h).unwrap() != Q::from(0) && mu.inner(&xi).unwrap() == Q::from(0))
        .map(|mu| so.multiplicity(mu).unwrap() as u64)
        .sum();
    assert_eq!(spectrum.kernel_dimension(), tangent_kernel);
    assert_eq!(spectrum.total(), so.orbit_dimension(&h).unwrap());
    assert!(matches!(
        orbits::principal_curvatures(&so, &h, &v(&[1, 0])),
        Err(Error::NotNormal { .. })
    ));
}

#[test]
fn nullity_bounds() {
    let e6 = pair("e6|f4", Params::NONE);
    assert_eq!(
        orbits::nullity_upper_bound(&e6, &v(&[2, 1, -3])).unwrap(),
        0
    );
    let bc = pair("sp(2p+n)|sp(p)+sp(p+n)", Params::pn(2, 3));
    assert_eq!(
        orbits::nullity_upper_bound(&bc, &v(&[2, 0])).unwrap(),
        3 + 12
    );
    let e7 = pair("e7|su(8)", Params::NONE);
    let d = e7.system().highest_root().clone();
    assert_eq!(orbits::nullity_upper_bound(&e7, &d).unwrap(), 1);
}

#[test]
fn ferus_examples() {
    assert_eq!(ferus::adams(1).unwrap(), 0);
    assert_eq!(ferus::adams(16).unwrap(), 8);
    assert_eq!(ferus::adams(56).unwrap(), 7);
    assert!(ferus::adams(0).is_err());
    assert_eq!(ferus::ferus(5).unwrap().f, 4);
    assert_eq!(ferus::ferus(10).unwrap().f, 8);
    for q in 0..10 {
        assert_eq!(ferus::ferus_number(1 << q), 1 << q);
    }
    assert_eq!(ferus::identity_range(1), 1);
    assert_eq!(ferus::identity_range(3), 7);
    assert_eq!(ferus::identity_range(4), 8);
    for q in 1..=9 {
        assert!(ferus::ferus_identity_check(q).unwrap());
    }
}

#[test]
fn equality_scan_examples() {
    let db = PairDb::embedded().unwrap();
    let rows = ferus::equality_scan(&db, ferus::ScanGrid { p_max: 4, n_max: 2 }).unwrap();
    let row = |key: &str| {
        rows.iter()
            .find(|r| r.key == key && r.root_class == RootClass::Long)
            .unwrap()
    };
    for (key, l, r, f) in [
        ("e8|so(16)", 57, 56, 56),
        ("g2|so(4)", 5, 4, 4),
        ("e6|f4", 24, 16, 16),
    ] {
        let got = row(key);
        assert_eq!((got.l, got.r, got.f), (l, r, f), "{key}");
        assert!(got.equality, "{key}");
    }
}

#[test]
fn projections() {
    let f4 = RootSystem::shared(RootSystemType::exceptional(Family::F4).unwrap()).unwrap();
    assert_eq!(cayley::m_roots(&f4).len(), 14);
    let a2 = sys(Family::A, 2);
    let mut m = cayley::m_roots(&a2);
    m.sort_by(|x, y| a2.order().compare(x, y));
    let mut simple = a2.simple_roots().to_vec();
    simple.sort_by(|x, y| a2.order().compare(x, y));
    assert_eq!(m, simple);
    assert!(cayley::m_roots(&sys(Family::A, 1)).is_empty());

    let e8 = RootSystem::shared(RootSystemType::exceptional(Family::E8).unwrap()).unwrap();
    let gammas = cayley::strongly_orthogonal(&cayley::m_roots(&e8), &e8).unwrap();
    assert_eq!(gammas.len(), 4);
    for (j, g) in gammas.iter().enumerate() {
        let c = cayley::project(g, &gammas);
        for (i, x) in c.iter().enumerate() {
            assert_eq!(*x, Q::from((i == j) as i64));
        }
    }
    let c = cayley::project(e8.highest_root(), &gammas);
    assert!(c.iter().all(|x| *x == Q::new(1, 2)));

    for (family, dim) in [(Family::E7, 33), (Family::E8, 57), (Family::F4, 15)] {
        let rep = cayley::appendix(family).unwrap();
        assert_eq!(rep.datum.restricted_type.family(), Family::F4);
        assert_eq!(rep.long_orbit_dimension, dim, "{family}");
    }
    let f4 = cayley::appendix(Family::F4).unwrap();
    assert!(f4.class_multiplicities.values().all(|&m| m == 1));
}
