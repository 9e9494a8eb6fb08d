//! The classical mock theta functions.
//!
//! Each entry pairs an Eulerian form, which is the ground truth, with its
//! known rewritings: alternative Eulerian sums, `g`/`h`/`k` forms, sums of
//! Appell-Lerch sums with several `z`, and the single-`z` form plus a theta
//! quotient. Representations are only ever compared with the Eulerian form.

use std::sync::OnceLock;

use crate::arith::BigRat;
use crate::dsl::{parse_identities, Expr, IdentityRecord};
use crate::error::{QError, QResult};
use crate::euler::{HyperSum, Poch};
use crate::eval::to_node;
use crate::lazy::Node;
use crate::monomial::QMonomial;

/// A representation: either text in the identity language or another
/// Eulerian sum.
#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Repr {
    Expr(Expr),
    Euler(fn() -> Node),
}

pub struct CatalogEntry {
    pub name: &'static str,
    /// Ramanujan's "order" of the function.
    pub family: u32,
    pub eulerian: fn() -> Node,
    pub representations: Vec<Repr>,
}

impl CatalogEntry {
    pub fn eulerian_node(&self) -> Node {
        (self.eulerian)().labeled(format!("catalog(\"{}\")", self.name))
    }

    pub fn representation_node(&self, i: usize) -> QResult<Node> {
        let label = format!("catalog(\"{}\").repr[{i}]", self.name);
        match self.representations.get(i) {
            Some(Repr::Expr(e)) => Ok(to_node(e)?.labeled(label)),
            Some(Repr::Euler(f)) => Ok(f().labeled(label)),
            None => Err(QError::InvalidParameter(format!(
                "{} has {} representations, index {i} requested",
                self.name,
                self.representations.len()
            ))),
        }
    }

    /// `catalog(name) = catalog(name).repr[i]` for every `i`.
    pub fn identities(&self) -> Vec<IdentityRecord> {
        (0..self.representations.len())
            .map(|i| {
                IdentityRecord::new(
                    format!("{}_r{i}", self.name),
                    Expr::catalog(self.name, None),
                    Expr::catalog(self.name, Some(i)),
                )
                .tagged("catalog")
            })
            .collect()
    }
}

pub fn entries() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn lookup(name: &str) -> QResult<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| QError::UnknownCatalogName(name.to_string()))
}

/// Every catalog entry checked against each of its representations.
pub fn catalog_identities() -> Vec<IdentityRecord> {
    entries()
        .iter()
        .flat_map(CatalogEntry::identities)
        .collect()
}

/// Identities beyond the catalog: the Hecke-form expansions, the mock
/// theta conjecture in its original shape, and a few closed evaluations.
pub fn extra_identities() -> Vec<IdentityRecord> {
    parse_identities(EXTRA).expect("builtin identities parse")
}

/// The catalog followed by the extra identities.
pub fn builtin_identities() -> Vec<IdentityRecord> {
    let mut v = catalog_identities();
    v.extend(extra_identities());
    v
}

const EXTRA: &str = r#"
identity m_half order 200 tags(appell) { lhs = m(q, q^2, -1); rhs = 1/2; }
identity m_zero order 200 tags(appell) { lhs = m(-1, q^2, q); rhs = 0; }

identity f551_product order 300 tags(hecke) {
    lhs = f[5,5,1](q^5, q^2; q);
    rhs = Jm[2]*Jm[10];
}

# f0 against 2 - 2*sum q^{10n^2}/((q^2;q^10)_{n+1} (q^8;q^10)_n) + theta quotient;
# the sum is 1 + Phi(q^2).
identity f0_mtc order 200 tags(fifth) {
    lhs = catalog("f0_5th");
    rhs = 2 - 2*(1 + subst(catalog("Phi_5th"); q^2))
        + Jm[5]*poch(q^5; q^10; inf)/(poch(q; q^5; inf)*poch(q^4; q^5; inf));
}
identity f0_mtc_appell order 200 tags(fifth) {
    lhs = catalog("f0_5th");
    rhs = 2*m(q^14, q^30, q^4) + 2*q^-2*m(q^4, q^30, q^4)
        + Jm[5]*poch(q^5; q^10; inf)/(poch(q; q^5; inf)*poch(q^4; q^5; inf));
}

identity sixth_product order 200 tags(sixth) {
    lhs = subst(catalog("phi_6th"); q^2) + 2*catalog("sigma_6th");
    rhs = poch(-q; q^2; inf)^2*Jm[6]*poch(-q^3; q^6; inf)^2;
}
identity phi6_hecke tags(hecke, sixth) {
    lhs = f[1,2,1](q, -q; q);
    rhs = 2*JB[1,4]*m(q, q^3, -1);
}

identity f232_tenth order 150 tags(hecke) {
    lhs = f[2,3,2](q^2, q^2; q);
    rhs = J[1,2]*catalog("phi_10th");
}
identity f343_seventh order 150 tags(hecke) {
    lhs = f[3,4,3](q^2, q^2; q);
    rhs = Jm[1]*catalog("F0_7th");
}
identity f373_fifth order 150 tags(hecke) {
    lhs = Jm[1]*catalog("f0_5th");
    rhs = f[3,7,3](q^2, q^2; q) + q^3*f[3,7,3](q^7, q^7; q);
}
identity f373_negative_base order 150 tags(hecke) {
    lhs = f[3,7,3](q^2, q^2; q) + q^3*f[3,7,3](q^7, q^7; q);
    rhs = f[3,7,3](q^(5/8), -q^(5/8); -q^(1/4));
}
identity g373_fifth order 150 tags(hecke) {
    lhs = gabc[3,7,3](q^(5/8), -q^(5/8); -q^(1/4); -1, -1);
    rhs = 2*Jm[1]*m(q^14, q^30, -1) + 2*q^-2*Jm[1]*m(q^4, q^30, -1);
}
identity bigtheta34_collapse order 150 tags(hecke) {
    lhs = bigtheta[3,4](q^(5/8), -q^(5/8); -q^(1/4));
    rhs = q^-2*JB[0,10]*J[3,12]*Jm[5]*Jm[1]/(JB[0,30]*J[8,20]);
}

identity strfn_1_0_0 order 100 tags(string) { lhs = strfn[1,0,0]; rhs = 1/Jm[1]; }
identity strfn_1_1_1 order 100 tags(string) { lhs = strfn[1,1,1]; rhs = 1/Jm[1]; }
identity strfn_1_2_0 order 100 tags(string) { lhs = strfn[1,2,0]; rhs = q/Jm[1]; }
identity strfn_1_3_1 order 100 tags(string) { lhs = strfn[1,3,1]; rhs = q^2/Jm[1]; }
"#;

fn q(e: i64) -> QMonomial {
    QMonomial::qi(e)
}

fn qh(num: i64, den: i64) -> QMonomial {
    QMonomial::q(BigRat::new(num, den))
}

fn mq(e: i64) -> QMonomial {
    QMonomial::ci(-1, e)
}

fn one() -> QMonomial {
    QMonomial::one()
}

/// `(arg;base)_{λn+κ}^power`.
fn p(arg: QMonomial, base: QMonomial, lm: u32, la: i64, power: i32) -> Poch {
    Poch::fixed(arg, base, lm, la, power)
}

/// `(arg·step^n;base)_{λn+κ}^power`.
fn pm(arg: QMonomial, step: QMonomial, base: QMonomial, lm: u32, la: i64, power: i32) -> Poch {
    Poch::moving(arg, step, base, lm, la, power)
}

/// `Σ lead·ratio^n·quad^{n²}·…` with the listed factors.
fn hs(lead: QMonomial, ratio: QMonomial, quad: QMonomial, factors: Vec<Poch>) -> HyperSum {
    factors
        .into_iter()
        .fold(HyperSum::new(lead, ratio, quad), HyperSum::with)
}

fn sum(label: &str, h: HyperSum) -> Node {
    h.node(label)
}

fn dsl(s: &str) -> Repr {
    Repr::Expr(crate::dsl::parse_expr(s).unwrap_or_else(|e| panic!("catalog text `{s}`: {e}")))
}

fn entry(
    name: &'static str,
    family: u32,
    eulerian: fn() -> Node,
    reprs: Vec<Repr>,
) -> CatalogEntry {
    CatalogEntry {
        name,
        family,
        eulerian,
        representations: reprs,
    }
}

fn build() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    v.extend(second());
    v.extend(third());
    v.extend(fifth());
    v.extend(sixth());
    v.extend(seventh());
    v.extend(eighth());
    v.extend(tenth());
    v
}

fn second() -> Vec<CatalogEntry> {
    vec![
        entry(
            "A_2nd",
            2,
            || {
                sum(
                    "A",
                    hs(
                        q(1),
                        q(1),
                        one(),
                        vec![p(mq(2), q(2), 1, 0, 1), p(q(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![
                Repr::Euler(|| {
                    sum(
                        "A'",
                        hs(
                            q(1),
                            q(2),
                            q(1),
                            vec![p(mq(1), q(2), 1, 0, 1), p(q(1), q(2), 1, 1, -2)],
                        ),
                    )
                }),
                dsl("-m(q, q^4, q^2)"),
            ],
        ),
        entry(
            "B_2nd",
            2,
            || {
                sum(
                    "B",
                    hs(
                        one(),
                        q(1),
                        one(),
                        vec![p(mq(1), q(2), 1, 0, 1), p(q(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![
                Repr::Euler(|| {
                    sum(
                        "B'",
                        hs(
                            one(),
                            q(1),
                            q(1),
                            vec![p(mq(2), q(2), 1, 0, 1), p(q(1), q(2), 1, 1, -2)],
                        ),
                    )
                }),
                dsl("-q^-1*m(1, q^4, q^3)"),
            ],
        ),
        entry(
            "mu_2nd",
            2,
            || {
                sum(
                    "mu",
                    hs(
                        one(),
                        mq(0),
                        q(1),
                        vec![p(q(1), q(2), 1, 0, 1), p(mq(2), q(2), 1, 0, -2)],
                    ),
                )
            },
            vec![
                dsl("2*m(-q, q^4, -1) + 2*m(-q, q^4, q)"),
                dsl("4*m(-q, q^4, -1) - J[2,4]^4/Jm[1]^3"),
            ],
        ),
    ]
}

fn third() -> Vec<CatalogEntry> {
    vec![
        entry(
            "f_3rd",
            3,
            || sum("f", hs(one(), one(), q(1), vec![p(mq(1), q(1), 1, 0, -2)])),
            vec![
                dsl("2 - 2*g(-1; q)"),
                dsl("2*m(-q, q^3, q) + 2*m(-q, q^3, q^2)"),
                dsl("4*m(-q, q^3, q) + J[3,6]^2/Jm[1]"),
            ],
        ),
        entry(
            "phi_3rd",
            3,
            || sum("phi", hs(one(), one(), q(1), vec![p(mq(2), q(2), 1, 0, -1)])),
            vec![
                dsl("(1 - zeta(1,4))*(1 + zeta(1,4)*g(zeta(1,4); q))"),
                dsl("(1 + zeta(1,4))*m(zeta(1,4)*q, q^3, -1) + (1 - zeta(1,4))*m(-zeta(1,4)*q, q^3, -1)"),
                dsl("m(q^5, q^12, q^4) + m(q^5, q^12, q^8) + q^-1*m(q, q^12, q^4) + q^-1*m(q, q^12, q^8)"),
                dsl("2*m(q, -q^3, -1) + 2*q*Jm[12]^3/(Jm[4]*J[3,12])"),
            ],
        ),
        entry(
            "psi_3rd",
            3,
            || sum("psi", hs(one(), one(), q(1), vec![p(q(1), q(2), 1, 0, -1)]).starting_at(1)),
            vec![
                dsl("q*g(q; q^4)"),
                dsl("-q^-1*m(q, q^12, q^2) - m(q^5, q^12, q^2)"),
                dsl("-m(q, -q^3, -q) + q*Jm[12]^3/(Jm[4]*J[3,12])"),
            ],
        ),
        entry(
            "chi_3rd",
            3,
            || sum("chi", hs(one(), one(), q(1), vec![p(mq(1), q(1), 1, 0, 1), p(mq(3), q(3), 1, 0, -1)])),
            vec![
                dsl("(1 + zeta(1,3))*(1 - zeta(1,3)*g(-zeta(1,3); q))"),
                dsl("2*m(-q, q^3, q^2) - m(-q, q^3, q)"),
                dsl("m(-q, q^3, q) + J[3,6]^2/Jm[1]"),
            ],
        ),
        entry(
            "omega_3rd",
            3,
            || sum("omega", hs(one(), q(2), q(2), vec![p(q(1), q(2), 1, 1, -2)])),
            vec![
                dsl("g(q; q^2)"),
                dsl("-q^-1*m(q, q^6, q^2) - q^-1*m(q, q^6, q^4)"),
                dsl("-2*q^-1*m(q, q^6, q^2) + Jm[6]^3/(Jm[2]*J[3,6])"),
            ],
        ),
        entry(
            "nu_3rd",
            3,
            || sum("nu", hs(one(), q(1), q(1), vec![p(mq(1), q(2), 1, 1, -1)])),
            vec![
                dsl("g(zeta(1,4)*q^(1/2); q)"),
                dsl("zeta(1,4)*q^(-1/2)*(m(zeta(1,4)*q^(1/2), q^3, -q) - m(-zeta(1,4)*q^(1/2), q^3, -q^2))"),
                dsl("q^-1*m(q^2, q^12, -q^3) + q^-1*m(q^2, q^12, -q^9)"),
                dsl("2*q^-1*m(q^2, q^12, -q^3) + Jm[1]*J[3,12]/Jm[2]"),
            ],
        ),
        entry(
            "rho_3rd",
            3,
            || sum("rho", hs(one(), q(2), q(2), vec![p(q(1), q(2), 1, 1, 1), p(q(3), q(6), 1, 1, -1)])),
            vec![
                dsl("g(zeta(1,3)*q; q^2)"),
                dsl("-zeta(1,3)*q^-1*m(q, q^6, zeta(1,3)*q^4) - zeta(2,3)*q^-1*m(q, q^6, zeta(2,3)*q^2)"),
                dsl("q^-1*m(q, q^6, -q)"),
            ],
        ),
    ]
}

fn fifth() -> Vec<CatalogEntry> {
    vec![
        entry(
            "f0_5th",
            5,
            || sum("f0", hs(one(), one(), q(1), vec![p(mq(1), q(1), 1, 0, -1)])),
            vec![
                dsl("J[5,10]*J[2,5]/Jm[1] - 2*q^2*g(q^2; q^10)"),
                dsl("m(q^14, q^30, q^14) + m(q^14, q^30, q^29) + q^-2*m(q^4, q^30, q^4) + q^-2*m(q^4, q^30, q^19)"),
                dsl("2*m(q^14, q^30, q^4) + 2*q^-2*m(q^4, q^30, q^4) + J[5,10]*J[2,5]/Jm[1]"),
            ],
        ),
        entry(
            "phi0_5th",
            5,
            || sum("phi0", hs(one(), one(), q(1), vec![p(mq(1), q(2), 1, 0, 1)])),
            vec![
                dsl("q*g(-q; -q^5) + Jm[10]*j(-q^2; -q^5)/J[2,10]"),
                dsl("m(-q^7, -q^15, q^9) - q^-1*m(q^2, -q^15, q^9)"),
            ],
        ),
        entry(
            "psi0_5th",
            5,
            || sum("psi0", hs(q(1), qh(3, 2), qh(1, 2), vec![p(mq(1), q(1), 1, 0, 1)])),
            vec![
                dsl("q^2*g(q^2; q^10) + q*Jm[5]*J[1,10]/J[2,5]"),
                dsl("-m(q^14, q^30, q^3) - q^-2*m(q^4, q^30, q^3)"),
            ],
        ),
        entry(
            "F0_5th",
            5,
            || sum("F0", hs(one(), one(), q(2), vec![p(q(1), q(2), 1, 0, -1)])),
            vec![
                dsl("1 + q*g(q; q^5) - q*Jm[10]*JB[5,20]/J[4,10]"),
                dsl("-1/2*q^-1*m(q^2, q^15, q^2) - 1/2*q^-1*m(q^2, q^15, -q^2) + 1/2*m(q^8, q^15, q^8) + 1/2*m(q^8, q^15, -q^8)"),
                dsl("-q^-1*m(q^2, q^15, q) + m(q^8, q^15, q^4) - q*Jm[10]*JB[5,20]/J[4,10]"),
            ],
        ),
        entry(
            "chi0_5th",
            5,
            || sum("chi0", hs(one(), q(1), one(), vec![pm(q(1), q(1), q(1), 1, 0, -1)])),
            vec![
                Repr::Euler(|| Node::one() + sum("chi0'", hs(q(1), q(2), one(), vec![pm(q(1), q(1), q(1), 1, 1, -1)]))),
                dsl("2 + 3*q*g(q; q^5) - Jm[5]^2*J[2,5]/J[1,5]^2"),
                dsl("2 - 2*m(q^7, q^15, q^12) - m(q^7, q^15, q^9) - 2*q^-1*m(q^2, q^15, q^12) - q^-1*m(q^2, q^15, q^9)"),
                dsl("2 - 3*m(q^7, q^15, q^9) - 3*q^-1*m(q^2, q^15, q^4) + 2*Jm[5]^2*J[2,5]/J[1,5]^2"),
            ],
        ),
        entry(
            "f1_5th",
            5,
            || sum("f1", hs(one(), q(1), q(1), vec![p(mq(1), q(1), 1, 0, -1)])),
            vec![
                dsl("J[5,10]*J[1,5]/Jm[1] - 2*q^3*g(q^4; q^10)"),
                dsl("q^-1*m(q^8, q^30, q^8) + q^-1*m(q^8, q^30, q^23) + q^-3*m(q^2, q^30, q^2) + q^-3*m(q^2, q^30, q^17)"),
                dsl("2*q^-1*m(q^8, q^30, q^8) + 2*q^-3*m(q^2, q^30, q^-8) + J[5,10]*J[1,5]/Jm[1]"),
            ],
        ),
        entry(
            "phi1_5th",
            5,
            || sum("phi1", hs(q(1), q(2), q(1), vec![p(mq(1), q(2), 1, 0, 1)])),
            vec![
                dsl("q^2*g(q^2; -q^5) + q*Jm[10]*j(q; -q^5)/J[4,10]"),
                dsl("q^-1*m(-q, -q^15, q^-3) - m(q^4, -q^15, q^3)"),
            ],
        ),
        entry(
            "psi1_5th",
            5,
            || sum("psi1", hs(one(), qh(1, 2), qh(1, 2), vec![p(mq(1), q(1), 1, 0, 1)])),
            vec![
                dsl("q^3*g(q^4; q^10) + Jm[5]*J[3,10]/J[1,5]"),
                dsl("-q^-1*m(q^8, q^30, q^-9) - q^-3*m(q^2, q^30, q^9)"),
            ],
        ),
        entry(
            "F1_5th",
            5,
            || sum("F1", hs(one(), q(2), q(2), vec![p(q(1), q(2), 1, 1, -1)])),
            vec![
                dsl("q*g(q^2; q^5) + Jm[10]*JB[5,20]/J[2,10]"),
                dsl("-1/2*q^-2*m(q, q^15, q) - 1/2*q^-2*m(q, q^15, -q) - 1/2*q^-1*m(q^4, q^15, q^4) - 1/2*q^-1*m(q^4, q^15, -q^4)"),
                dsl("-q^-2*m(q, q^15, q^-4) - q^-1*m(q^4, q^15, q^4) + Jm[10]*JB[5,20]/J[2,10]"),
            ],
        ),
        entry(
            "chi1_5th",
            5,
            || sum("chi1", hs(one(), q(1), one(), vec![pm(q(1), q(1), q(1), 1, 1, -1)])),
            vec![
                Repr::Euler(|| {
                    let h = hs(q(1), q(2), one(), vec![pm(mq(0), q(1), q(1), 0, 1, 1), pm(q(1), q(1), q(1), 1, 1, -1)]);
                    Node::one() + sum("chi1'", h)
                }),
                dsl("3*q*g(q^2; q^5) + Jm[5]^2*J[1,5]/J[2,5]^2"),
                dsl("-2*q^-1*m(q^4, q^15, q^-6) - q^-1*m(q^4, q^15, q^3) - 2*q^-2*m(q, q^15, q^6) - q^-2*m(q, q^15, q^-3)"),
                dsl("-3*q^-1*m(q^4, q^15, q^3) - 3*q^-2*m(q, q^15, q^2) - 2*Jm[5]^2*J[1,5]/J[2,5]^2"),
            ],
        ),
        entry(
            "Phi_5th",
            5,
            || Node::int(-1) + sum("Phi", hs(one(), one(), q(5), vec![p(q(1), q(5), 1, 1, -1), p(q(4), q(5), 1, 0, -1)])),
            vec![dsl("q*g(q; q^5)"), dsl("-q^-1*m(q^2, q^15, q^2) - m(q^7, q^15, q^2)")],
        ),
        entry(
            "Psi_5th",
            5,
            || Node::int(-1) + sum("Psi", hs(one(), one(), q(5), vec![p(q(2), q(5), 1, 1, -1), p(q(3), q(5), 1, 0, -1)])),
            vec![dsl("q^2*g(q^2; q^5)"), dsl("-q^-1*m(q, q^15, q^-4) - m(q^4, q^15, q^4)")],
        ),
    ]
}

fn sixth() -> Vec<CatalogEntry> {
    vec![
        entry(
            "phi_6th",
            6,
            || {
                sum(
                    "phi",
                    hs(
                        one(),
                        mq(0),
                        q(1),
                        vec![p(q(1), q(2), 1, 0, 1), p(mq(1), q(1), 2, 0, -1)],
                    ),
                )
            },
            vec![dsl("2*m(q, q^3, -1)")],
        ),
        entry(
            "psi_6th",
            6,
            || {
                sum(
                    "psi",
                    hs(
                        q(1),
                        mq(2),
                        q(1),
                        vec![p(q(1), q(2), 1, 0, 1), p(mq(1), q(1), 2, 1, -1)],
                    ),
                )
            },
            vec![dsl("m(1, q^3, -q)")],
        ),
        entry(
            "rho_6th",
            6,
            || {
                sum(
                    "rho",
                    hs(
                        one(),
                        qh(1, 2),
                        qh(1, 2),
                        vec![p(mq(1), q(1), 1, 0, 1), p(q(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![dsl("-q^-1*m(1, q^6, q)")],
        ),
        entry(
            "sigma_6th",
            6,
            || {
                sum(
                    "sigma",
                    hs(
                        q(1),
                        qh(3, 2),
                        qh(1, 2),
                        vec![p(mq(1), q(1), 1, 0, 1), p(q(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![dsl("-m(q^2, q^6, q)")],
        ),
        entry(
            "lambda_6th",
            6,
            || {
                sum(
                    "lambda",
                    hs(
                        one(),
                        mq(1),
                        one(),
                        vec![p(q(1), q(2), 1, 0, 1), p(mq(1), q(1), 1, 0, -1)],
                    ),
                )
            },
            vec![
                dsl("q^-1*m(1, q^6, -q^2) + q^-1*m(1, q^6, -q)"),
                dsl("2*q^-1*m(1, q^6, -q^2) + J[1,2]*JB[3,12]/JB[1,4]"),
            ],
        ),
        entry(
            "mu_6th",
            6,
            || {
                let h = hs(
                    q(1),
                    mq(1),
                    one(),
                    vec![
                        pm(mq(0), q(1), q(1), 0, 1, 1),
                        p(q(1), q(2), 1, 0, 1),
                        p(mq(1), q(1), 1, 1, -1),
                    ],
                );
                let half = Node::rat(BigRat::new(1, 2));
                half.clone() + half * sum("mu", h)
            },
            vec![
                dsl("m(q^2, q^6, -1) + m(q^2, q^6, -q^3)"),
                dsl("2*m(q^2, q^6, -1) - J[1,2]*JB[1,3]/(2*JB[1,4])"),
            ],
        ),
        entry(
            "gamma_6th",
            6,
            || {
                sum(
                    "gamma",
                    hs(
                        one(),
                        one(),
                        q(1),
                        vec![p(q(1), q(1), 1, 0, 1), p(q(3), q(3), 1, 0, -1)],
                    ),
                )
            },
            vec![
                dsl("(1 - zeta(1,3))*(1 + zeta(1,3)*g(zeta(1,3); q))"),
                dsl("2*m(q, q^3, -1) + m(q, q^3, -q)"),
                dsl("3*m(q, q^3, -q) + J[1,2]^2/JB[1,3]"),
            ],
        ),
        entry(
            "phibar_6th",
            6,
            || {
                sum(
                    "phibar",
                    hs(
                        one(),
                        q(1),
                        one(),
                        vec![p(mq(1), q(1), 2, -1, 1), p(q(1), q(2), 1, 0, -1)],
                    )
                    .starting_at(1),
                )
            },
            vec![
                dsl("-3/4*m(q, q^3, q) - 1/4*m(q, q^3, -q)"),
                dsl("-m(q, q^3, q) - q*JB[3,12]^3/(Jm[1]*JB[1,4])"),
            ],
        ),
        entry(
            "psibar_6th",
            6,
            || {
                sum(
                    "psibar",
                    hs(
                        one(),
                        q(1),
                        one(),
                        vec![p(mq(1), q(1), 2, -2, 1), p(q(1), q(2), 1, 0, -1)],
                    )
                    .starting_at(1),
                )
            },
            vec![
                dsl("-3/4*m(1, q^3, q) + 1/4*m(1, q^3, -q)"),
                dsl("-1/2*m(1, q^3, q) + q*Jm[6]^3/(2*Jm[1]*Jm[2])"),
            ],
        ),
    ]
}

fn seventh() -> Vec<CatalogEntry> {
    vec![
        entry(
            "F0_7th",
            7,
            || sum("F0", hs(one(), one(), q(1), vec![pm(q(1), q(1), q(1), 1, 0, -1)])),
            vec![
                dsl("2 + 2*q*g(q; q^7) - J[3,7]^2/Jm[1]"),
                dsl("m(q^10, q^21, q^9) + m(q^10, q^21, q^-9) - q^-1*m(q^4, q^21, q^9) - q^-1*m(q^4, q^21, q^-9)"),
                dsl("2*m(q^10, q^21, q^9) - 2*q^-1*m(q^4, q^21, q^-9) + J[3,7]^2/Jm[1]"),
            ],
        ),
        entry(
            "F1_7th",
            7,
            || sum("F1", hs(one(), one(), q(1), vec![pm(one(), q(1), q(1), 1, 0, -1)]).starting_at(1)),
            vec![
                dsl("2*q^2*g(q^2; q^7) + q*J[1,7]^2/Jm[1]"),
                dsl("-m(q^8, q^21, q^3) - m(q^8, q^21, q^-3) - q^-2*m(q, q^21, q^3) - q^-2*m(q, q^21, q^-3)"),
                dsl("-2*m(q^8, q^21, q^3) - 2*q^-2*m(q, q^21, q^3) - q*J[1,7]^2/Jm[1]"),
            ],
        ),
        entry(
            "F2_7th",
            7,
            || sum("F2", hs(one(), q(1), q(1), vec![pm(q(1), q(1), q(1), 1, 1, -1)])),
            vec![
                dsl("2*q^2*g(q^3; q^7) + J[2,7]^2/Jm[1]"),
                dsl("-q^-1*m(q^5, q^21, q^6) - q^-1*m(q^5, q^21, q^-6) - q^-2*m(q^2, q^21, q^6) - q^-2*m(q^2, q^21, q^-6)"),
                dsl("-2*q^-1*m(q^5, q^21, q^6) - 2*q^-2*m(q^2, q^21, q^-6) + J[2,7]^2/Jm[1]"),
            ],
        ),
    ]
}

fn eighth() -> Vec<CatalogEntry> {
    vec![
        entry(
            "S0_8th",
            8,
            || {
                sum(
                    "S0",
                    hs(
                        one(),
                        one(),
                        q(1),
                        vec![p(mq(1), q(2), 1, 0, 1), p(mq(2), q(2), 1, 0, -1)],
                    ),
                )
            },
            vec![
                dsl("m(-q^3, q^8, -q^2) + m(-q^3, q^8, -q^6)"),
                dsl("2*m(-q^3, q^8, -1) + q*JB[1,8]*J[2,8]^2/J[3,8]^2"),
            ],
        ),
        entry(
            "S1_8th",
            8,
            || {
                sum(
                    "S1",
                    hs(
                        one(),
                        q(2),
                        q(1),
                        vec![p(mq(1), q(2), 1, 0, 1), p(mq(2), q(2), 1, 0, -1)],
                    ),
                )
            },
            vec![
                dsl("-q^-1*m(-q, q^8, -q^2) - q^-1*m(-q, q^8, -q^6)"),
                dsl("-2*q^-1*m(-q, q^8, -1) + JB[3,8]*J[2,8]^2/(q*J[1,8]^2)"),
            ],
        ),
        entry(
            "T0_8th",
            8,
            || {
                sum(
                    "T0",
                    hs(
                        q(2),
                        q(3),
                        q(1),
                        vec![p(mq(2), q(2), 1, 0, 1), p(mq(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![dsl("-m(-q^3, q^8, q^2)")],
        ),
        entry(
            "T1_8th",
            8,
            || {
                sum(
                    "T1",
                    hs(
                        one(),
                        q(1),
                        q(1),
                        vec![p(mq(2), q(2), 1, 0, 1), p(mq(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![dsl("q^-1*m(-q, q^8, q^6)")],
        ),
        entry(
            "U0_8th",
            8,
            || {
                sum(
                    "U0",
                    hs(
                        one(),
                        one(),
                        q(1),
                        vec![p(mq(1), q(2), 1, 0, 1), p(mq(4), q(4), 1, 0, -1)],
                    ),
                )
            },
            vec![dsl("2*m(-q, q^4, -1)")],
        ),
        entry(
            "U1_8th",
            8,
            || {
                sum(
                    "U1",
                    hs(
                        q(1),
                        q(2),
                        q(1),
                        vec![p(mq(1), q(2), 1, 0, 1), p(mq(2), q(4), 1, 1, -1)],
                    ),
                )
            },
            vec![dsl("-m(-q, q^4, -q^2)")],
        ),
        entry(
            "V0_8th",
            8,
            || {
                let h = hs(
                    one(),
                    one(),
                    q(1),
                    vec![p(mq(1), q(2), 1, 0, 1), p(q(1), q(2), 1, 0, -1)],
                );
                Node::int(-1) + Node::int(2) * sum("V0", h)
            },
            vec![
                Repr::Euler(|| {
                    let h = hs(
                        one(),
                        one(),
                        q(2),
                        vec![p(mq(2), q(4), 1, 0, 1), p(q(1), q(2), 2, 1, -1)],
                    );
                    Node::int(-1) + Node::int(2) * sum("V0'", h)
                }),
                dsl("-q^-1*m(1, q^8, q) - q^-1*m(1, q^8, q^3)"),
                dsl("-2*q^-1*m(1, q^8, q) - JB[1,4]^2/J[2,8]"),
            ],
        ),
        entry(
            "V1_8th",
            8,
            || {
                sum(
                    "V1",
                    hs(
                        q(1),
                        q(2),
                        q(1),
                        vec![p(mq(1), q(2), 1, 0, 1), p(q(1), q(2), 1, 1, -1)],
                    ),
                )
            },
            vec![
                Repr::Euler(|| {
                    sum(
                        "V1'",
                        hs(
                            q(1),
                            q(2),
                            q(2),
                            vec![p(mq(4), q(4), 1, 0, 1), p(q(1), q(2), 2, 2, -1)],
                        ),
                    )
                }),
                Repr::Euler(|| {
                    sum(
                        "V1''",
                        hs(
                            q(1),
                            q(1),
                            one(),
                            vec![p(mq(1), q(1), 2, 0, 1), p(mq(2), q(4), 1, 1, -1)],
                        ),
                    )
                }),
                dsl("-m(q^2, q^8, q)"),
            ],
        ),
    ]
}

fn tenth() -> Vec<CatalogEntry> {
    vec![
        entry(
            "phi_10th",
            10,
            || {
                sum(
                    "phi",
                    hs(one(), qh(1, 2), qh(1, 2), vec![p(q(1), q(2), 1, 1, -1)]),
                )
            },
            vec![
                dsl("2*q*h(q^2; q^5) + Jm[5]*Jm[10]*J[4,10]/(J[2,5]*J[2,10])"),
                dsl("-q^-1*m(q, q^10, q) - q^-1*m(q, q^10, q^2)"),
                dsl("-2*q^-1*m(q, q^10, q^2) + Jm[5]*Jm[10]*J[4,10]/(J[2,5]*J[2,10])"),
            ],
        ),
        entry(
            "psi_10th",
            10,
            || {
                sum(
                    "psi",
                    hs(q(1), qh(3, 2), qh(1, 2), vec![p(q(1), q(2), 1, 1, -1)]),
                )
            },
            vec![
                dsl("2*q*h(q; q^5) - q*Jm[5]*Jm[10]*J[2,10]/(J[1,5]*J[4,10])"),
                dsl("-m(q^3, q^10, q) - m(q^3, q^10, q^3)"),
                dsl("-2*m(q^3, q^10, q) - q*Jm[5]*Jm[10]*J[2,10]/(J[1,5]*J[4,10])"),
            ],
        ),
        entry(
            "X_10th",
            10,
            || sum("X", hs(one(), mq(0), q(1), vec![p(mq(1), q(1), 2, 0, -1)])),
            vec![
                dsl("2*q*k(q; q^5) - Jm[5]*Jm[10]*J[2,5]/(J[2,10]*J[1,5])"),
                dsl("m(-q^2, q^5, q) + m(-q^2, q^5, q^4)"),
                dsl("2*m(-q^2, q^5, q^4) - J[3,10]*J[5,10]/J[1,5]"),
            ],
        ),
        entry(
            "chi_10th",
            10,
            || sum("chi", hs(q(1), mq(2), q(1), vec![p(mq(1), q(1), 2, 1, -1)])),
            vec![
                dsl("2 - 2*q^2*k(q^2; q^5) + q*Jm[5]*Jm[10]*J[1,5]/(J[4,10]*J[2,5])"),
                dsl("m(-q, q^5, q^2) + m(-q, q^5, q^3)"),
                dsl("2*m(-q, q^5, q^2) + q*J[1,10]*J[5,10]/J[2,5]"),
            ],
        ),
    ]
}
