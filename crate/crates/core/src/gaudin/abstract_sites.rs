//! Abstract braided Gaudin systems: site entries are free generators modulo
//! the overlined site relations, and commutativity of the quadratic
//! Hamiltonians is verified by bounded-degree ideal membership instead of in
//! a concrete realization.

use crate::braiding::{BraidKind, Braiding};
use crate::freealg::{ideal_member, Alphabet, Membership, NcPoly, QMode, RelationSet};
use crate::report::{timed, CheckRecord};
use crate::scalar::{Rat, Scalar};
use crate::tensor::{mul_scalar_left, mul_scalar_right, TensorOp};

/// K sites of m x m generator matrices modulo the braided site relations.
pub struct AbstractGaudin {
    pub braiding: Braiding,
    pub sites_count: usize,
    pub points: Vec<Rat>,
    pub rels: RelationSet,
}

/// The m x m matrix of site generators for site k (0-based), as a one-factor
/// tensor operator with NcPoly entries.
fn site_matrix_nc(m: u32, k: usize) -> TensorOp<NcPoly> {
    let mut site = TensorOp::zero(1, m);
    for i in 0..m {
        for j in 0..m {
            site.set(i, j, NcPoly::gen(Alphabet::site_gen(m, k + 1, i + 1, j + 1)));
        }
    }
    site
}

/// Extract the overlined site relations as noncommutative polynomials: the
/// commutation of distinct sites and the single-site gl-type relation, both
/// with the second copy conjugated by the braiding.
pub fn abstract_site_relations(b: &Braiding, k_sites: usize) -> Vec<(NcPoly, String)> {
    assert_eq!(b.kind, BraidKind::Involutive);
    let m = b.dim;
    let second = |x: &TensorOp<NcPoly>| -> TensorOp<NcPoly> {
        let m1 = x.embed(1, 2);
        mul_scalar_left(b.matrix(), &mul_scalar_right(&m1, b.inverse()))
    };
    let mut raw = Vec::new();
    for k in 0..k_sites {
        let sk = site_matrix_nc(m, k);
        let sk1 = sk.embed(1, 2);
        let sk2 = second(&sk);
        for l in 0..k_sites {
            if l == k {
                continue;
            }
            let sl2 = second(&site_matrix_nc(m, l));
            let rel = sk1.mul(&sl2).sub(&sl2.mul(&sk1));
            for (r, c, p) in rel.entries() {
                if !p.is_zero() {
                    raw.push((p.clone(), format!("distinct sites ({},{}) [{r},{c}]", k + 1, l + 1)));
                }
            }
        }
        let lhs = sk1.mul(&sk2).sub(&sk2.mul(&sk1));
        let rhs = mul_scalar_right(&sk1.sub(&sk2), b.matrix());
        let rel = lhs.sub(&rhs);
        for (r, c, p) in rel.entries() {
            if !p.is_zero() {
                raw.push((p.clone(), format!("single site {} [{r},{c}]", k + 1)));
            }
        }
    }
    raw
}

impl AbstractGaudin {
    pub fn new(braiding: Braiding, k_sites: usize, points: Vec<Rat>) -> Self {
        let m = braiding.dim;
        let raw = abstract_site_relations(&braiding, k_sites);
        let alphabet = Alphabet::sites(m, k_sites);
        let rels = RelationSet::from_polys(alphabet, m, raw);
        AbstractGaudin {
            braiding,
            sites_count: k_sites,
            points,
            rels,
        }
    }

    /// H_k = sum_{l != k} Tr_R(M(k) M(l)) / (u_k - u_l) as a noncommutative
    /// polynomial in the site generators.
    pub fn hamiltonians(&self) -> Vec<NcPoly> {
        let m = self.braiding.dim;
        let c = self.braiding.c_matrix().to_tensor();
        (0..self.sites_count)
            .map(|k| {
                let mut h = NcPoly::zero();
                for l in 0..self.sites_count {
                    if l == k {
                        continue;
                    }
                    let w = Scalar::from_rat(self.points[k].clone())
                        .sub(&Scalar::from_rat(self.points[l].clone()))
                        .inv();
                    let prod = site_matrix_nc(m, k).mul(&site_matrix_nc(m, l));
                    let t = mul_scalar_left(&c, &prod).trace();
                    h = h.add(&t.scalar_mul(&w));
                }
                h
            })
            .collect()
    }
}

/// Certified commutativity of the abstract quadratic Hamiltonians:
/// [H_k, H_l] must be an ideal member at the degree cap.
pub fn abstract_commutativity(
    ag: &AbstractGaudin,
    cap: usize,
    mode: &QMode,
) -> Vec<CheckRecord> {
    let hams = ag.hamiltonians();
    let mut out = Vec::new();
    for k in 0..hams.len() {
        for l in k..hams.len() {
            out.push(timed(|| {
                let params = format!(
                    "m={} K={} [H_{},H_{}]",
                    ag.braiding.dim,
                    ag.sites_count,
                    k + 1,
                    l + 1
                );
                let comm = hams[k].mul(&hams[l]).sub(&hams[l].mul(&hams[k]));
                if comm.is_zero() {
                    return CheckRecord::pass("abstract_commutativity", params)
                        .with_note("identically zero");
                }
                match ideal_member(&comm, &ag.rels, cap, mode) {
                    Ok(Membership::Member(cert)) => {
                        if !cert.verify(&comm, &ag.rels) {
                            return CheckRecord::fail(
                                "abstract_commutativity",
                                params,
                                "certificate failed re-evaluation",
                            );
                        }
                        CheckRecord::pass("abstract_commutativity", params)
                            .with_note(format!(
                                "member; certificate with {} terms",
                                cert.terms.len()
                            ))
                            .with_certificate(cert.to_json(&ag.rels).to_string())
                    }
                    Ok(Membership::NotDerivable { t_max, degree_cap }) => {
                        CheckRecord::inconclusive(
                            "abstract_commutativity",
                            params,
                            format!("not derivable at (T={t_max}, D={degree_cap})"),
                        )
                    }
                    Err(e) => CheckRecord::fail("abstract_commutativity", params, e.to_string()),
                }
            }));
        }
    }
    out
}
