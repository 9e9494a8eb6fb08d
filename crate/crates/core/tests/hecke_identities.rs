mod common;

use common::*;
use mockq::appell::{jb, m_node};
use mockq::hecke::*;
use mockq::theta::j_node;
use mockq::{BigRat, CycRat, Node, QMonomial, QResult};

fn mono(m: QMonomial) -> Node {
    Node::mono(&m)
}

fn f(a: i64, b: i64, c: i64, x: &QMonomial, y: &QMonomial, base: &QMonomial) -> QResult<Node> {
    f_node(HeckeParams::new(
        a,
        b,
        c,
        x.clone(),
        y.clone(),
        base.clone(),
    ))
}

fn jq(x: QMonomial, base: &QMonomial) -> Node {
    j_node(&x, base)
}

#[test]
fn master_theorem() {
    let order = o(30);
    let pairs = [
        (1, 1),
        (1, 2),
        (2, 1),
        (1, 3),
        (3, 1),
        (2, 3),
        (3, 2),
        (1, 4),
        (3, 4),
    ];
    for (i, (n, p)) in pairs.into_iter().enumerate() {
        for_generic(
            100 + i as u64,
            3,
            |r| (random_mono(r, 2), random_mono(r, 2)),
            |(x, y)| {
                let b = q(1);
                Ok((f(n, n + p, n, x, y, &b)?, master_rhs_node(n, p, x, y, &b)?))
            },
            &order,
        );
    }
}

#[test]
fn master_theorem_n1_p1_display() {
    let order = o(30);
    for_generic(
        7,
        4,
        |r| (random_mono(r, 2), random_mono(r, 2)),
        |(x, y)| {
            let b = q(1);
            let m1 = c(-1);
            let g = Node::product(vec![
                jq(y.clone(), &b),
                m_node(&(&q(2) * &(x / &y.powi(2))), &q(3), &m1)?,
            ]) + Node::product(vec![
                jq(x.clone(), &b),
                m_node(&(&q(2) * &(y / &x.powi(2))), &q(3), &m1)?,
            ]);
            let num = Node::product(vec![
                mono(y.clone()),
                jb(&b, 3).pow(3),
                jq((x / y).neg(), &b),
                jq(&(x * y) * &q(2), &q(3)),
            ]);
            let den = Node::product(vec![
                jq(QMonomial::ci(-1, 0), &q(3)),
                jq((&(&y.powi(2) / x) * &q(1)).neg(), &q(3)),
                jq((&(&x.powi(2) / y) * &q(1)).neg(), &q(3)),
            ]);
            Ok((f(1, 2, 1, x, y, &b)?, g - num / den))
        },
        &order,
    );
}

#[test]
fn divisible_b_theorem() {
    let order = o(30);
    let triples = [(1, 2, 1), (1, 3, 1), (1, 2, 2), (2, 2, 1), (5, 5, 1)];
    for (i, (a, b, cc)) in triples.into_iter().enumerate() {
        for_generic(
            200 + i as u64,
            3,
            |r| (random_mono(r, 2), random_mono(r, 2)),
            |(x, y)| {
                let base = q(1);
                Ok((
                    f(a, b, cc, x, y, &base)?,
                    divisible_rhs_node(a, b, cc, x, y, &base)?,
                ))
            },
            &order,
        );
    }
}

#[test]
fn kac_peterson() {
    let order = o(120);
    let lhs = f(5, 5, 1, &q(5), &q(2), &q(1)).unwrap();
    let rhs = jb(&q(1), 2) * jb(&q(1), 10);
    let (l, r) = (lhs.eval(&order).unwrap(), rhs.eval(&order).unwrap());
    assert_eq!(l.first_mismatch(&r, &order), None);
    let thm = divisible_rhs_node(5, 5, 1, &q(5), &q(2), &q(1)).unwrap();
    assert!(thm.eval(&o(60)).unwrap().agrees_with(&r, &o(60)));
}

#[test]
fn subtheorems() {
    let order = o(30);
    let cases = [
        (1, 1),
        (2, 1),
        (3, 1),
        (1, 2),
        (3, 2),
        (1, 3),
        (2, 3),
        (1, 4),
        (3, 4),
    ];
    for (i, (n, p)) in cases.into_iter().enumerate() {
        for_generic(
            300 + i as u64,
            3,
            |r| (n, p, random_mono(r, 2), random_mono(r, 2)),
            |(_, _, x, y)| {
                let b = q(1);
                Ok((
                    f(n, n + p, n, x, y, &b)?,
                    subtheorem_rhs_node(n, p, x, y, &b)?,
                ))
            },
            &order,
        );
    }
}

#[test]
fn sixth_order_phi_hecke_form() {
    // f_{1,2,1}(q,-q,q) = 2 Jbar_{1,4} m(q,q^3,-1)
    let order = o(60);
    let lhs = f(1, 2, 1, &q(1), &mq(1), &q(1)).unwrap();
    let rhs = Node::product(vec![
        Node::int(2),
        jq(mq(1), &q(4)),
        m_node(&q(1), &q(3), &c(-1)).unwrap(),
    ]);
    assert!(lhs
        .eval(&order)
        .unwrap()
        .agrees_with(&rhs.eval(&order).unwrap(), &order));
    // the theorem side at the same point
    let thm = master_rhs_node(1, 1, &q(1), &mq(1), &q(1)).unwrap();
    assert!(thm
        .eval(&order)
        .unwrap()
        .agrees_with(&rhs.eval(&order).unwrap(), &order));
}

fn fifth_point() -> (QMonomial, QMonomial, QMonomial) {
    let x = qr(5, 8);
    let base = QMonomial::new(CycRat::from_int(-1), BigRat::new(1, 4));
    (x.clone(), x.neg(), base)
}

#[test]
fn f373_at_negative_base() {
    // f_{3,7,3}(q^2,q^2,q) + q^3 f_{3,7,3}(q^7,q^7,q) = f_{3,7,3}(q^{5/8},-q^{5/8},-q^{1/4})
    let order = o(60);
    let (x, y, base) = fifth_point();
    let lhs = f(3, 7, 3, &q(2), &q(2), &q(1)).unwrap()
        + mono(q(3)) * f(3, 7, 3, &q(7), &q(7), &q(1)).unwrap();
    let rhs = f(3, 7, 3, &x, &y, &base).unwrap();
    assert!(lhs
        .eval(&order)
        .unwrap()
        .agrees_with(&rhs.eval(&order).unwrap(), &order));
}

#[test]
fn big_theta_34_collapse() {
    let order = o(60);
    let (x, y, base) = fifth_point();
    let theta = big_theta_node(3, 4, &x, &y, &base).unwrap();
    let jj = |a: i64, m: i64| jq(q(a), &q(m));
    let jbar = |a: i64, m: i64| jq(mq(a), &q(m));
    let collapsed = Node::product(vec![
        mono(q(-2)),
        jbar(0, 10),
        jj(3, 12),
        jb(&q(1), 5),
        jb(&q(1), 1),
    ]) / Node::product(vec![jbar(0, 30), jj(8, 20)]);
    let t = theta.eval(&order).unwrap();
    assert!(t.agrees_with(&collapsed.eval(&order).unwrap(), &order));
    let unsimplified = Node::product(vec![
        mono(QMonomial::ci(-1, -1)),
        jbar(0, 10),
        jj(3, 12),
        jj(11, 10),
        jj(3, 5),
        jj(5, 10).pow(2),
        jb(&q(1), 10).pow(2),
    ]) / Node::product(vec![
        jbar(0, 30),
        jbar(6, 10),
        jb(&q(1), 5).pow(3),
        jb(&q(1), 20),
    ]);
    assert!(t.agrees_with(&unsimplified.eval(&order).unwrap(), &order));
}

#[test]
fn g373_at_negative_base() {
    let order = o(60);
    let (x, y, base) = fifth_point();
    let m1 = c(-1);
    let g = g_abc_node(3, 7, 3, &x, &y, &base, &m1, &m1).unwrap();
    let j1 = jb(&q(1), 1);
    let rhs = Node::product(vec![
        Node::int(2),
        j1.clone(),
        m_node(&q(14), &q(30), &m1).unwrap(),
    ]) + Node::product(vec![
        Node::int(2),
        mono(q(-2)),
        j1,
        m_node(&q(4), &q(30), &m1).unwrap(),
    ]);
    assert!(g
        .eval(&order)
        .unwrap()
        .agrees_with(&rhs.eval(&order).unwrap(), &order));
}

#[test]
fn parity_split() {
    let order = o(40);
    for (a, b, cc) in [(1, 2, 1), (2, 3, 1), (3, 7, 3)] {
        for_generic(
            400 + a as u64,
            4,
            |r| (random_mono(r, 3), random_mono(r, 3)),
            |(x, y)| {
                let base = q(1);
                let q4 = q(4);
                let x2 = x.powi(2).neg();
                let y2 = y.powi(2).neg();
                let part = |ex: i64, ey: i64| f(a, b, cc, &(&x2 * &q(ex)), &(&y2 * &q(ey)), &q4);
                let rhs = part(a, cc)?
                    - mono(x.clone()) * part(3 * a, cc + 2 * b)?
                    - mono(y.clone()) * part(a + 2 * b, 3 * cc)?
                    + mono(&(x * y) * &q(b)) * part(3 * a + 2 * b, 3 * cc + 2 * b)?;
                Ok((f(a, b, cc, x, y, &base)?, rhs))
            },
            &order,
        );
    }
}

#[test]
fn swap_identity() {
    let order = o(40);
    for (a, b, cc) in [(1, 2, 1), (2, 5, 3), (5, 5, 1)] {
        for_generic(
            500 + b as u64,
            4,
            |r| (random_mono(r, 3), random_mono(r, 3)),
            |(x, y)| {
                let base = q(1);
                let pre = (&q(a + b + cc) / &(x * y)).neg();
                let rhs =
                    mono(pre) * f(a, b, cc, &(&q(2 * a + b) / x), &(&q(2 * cc + b) / y), &base)?;
                Ok((f(a, b, cc, x, y, &base)?, rhs))
            },
            &order,
        );
    }
}

/// `Σ_{m=0}^{n-1} t(m)`, read as `−Σ_{m=n}^{-1} t(m)` when `n < 0`.
fn conv_sum(n: i64, t: impl Fn(i64) -> Node) -> Node {
    if n >= 0 {
        Node::sum((0..n).map(&t).collect())
    } else {
        -Node::sum((n..0).map(&t).collect())
    }
}

fn c2(r: i64) -> i64 {
    r * (r - 1) / 2
}

#[test]
fn general_functional_equation() {
    let order = o(40);
    let shifts = [(1, 0), (0, 1), (1, 1), (-1, 1), (-2, 3)];
    for (i, (l, k)) in shifts.into_iter().enumerate() {
        let (a, b, cc) = (2, 3, 1);
        for_generic(
            600 + i as u64,
            4,
            |r| (random_mono(r, 3), random_mono(r, 3)),
            |(x, y)| {
                let base = q(1);
                let (mx, my) = (x.neg(), y.neg());
                let pre = &(&mx.powi(l) * &my.powi(k)) * &q(a * c2(l) + b * l * k + cc * c2(k));
                let shifted = f(
                    a,
                    b,
                    cc,
                    &(x * &q(a * l + b * k)),
                    &(y * &q(b * l + cc * k)),
                    &base,
                )?;
                let s1 = conv_sum(l, |m| {
                    mono(&mx.powi(m) * &q(a * c2(m))) * jq(y * &q(m * b), &q(cc))
                });
                let s2 = conv_sum(k, |m| {
                    mono(&my.powi(m) * &q(cc * c2(m))) * jq(x * &q(m * b), &q(a))
                });
                Ok((f(a, b, cc, x, y, &base)?, mono(pre) * shifted + s1 + s2))
            },
            &order,
        );
    }
}

/// Both sides of the `x`-functional equation shared by `f` and `g(…,−1,−1)`,
/// with `G` supplied by `make`.
fn shared_equation(
    (a, b, cc): (i64, i64, i64),
    x: &QMonomial,
    y: &QMonomial,
    make: impl Fn(&QMonomial, &QMonomial) -> QResult<Node>,
) -> QResult<(Node, Node)> {
    let d = b * b - a * cc;
    let (mx, my) = (x.neg(), y.neg());
    let p = &(&mx.powi(cc) / &my.powi(b)) * &q(cc * c2(b + 1) - a * c2(cc + 1));
    let s1 = Node::sum(
        (0..cc)
            .map(|r| mono(&mx.powi(r) * &q(a * c2(r) + r * d)) * jq(y * &q(r * b), &q(cc)))
            .collect(),
    );
    let s2 = Node::sum(
        (0..b)
            .map(|r| mono(&my.powi(r) * &q(cc * c2(r))) * jq(x * &q(r * b), &q(a)))
            .collect(),
    );
    let lhs = make(&(x * &q(d)), y)?;
    let rhs = mono(p.clone()) * make(x, y)? + s1 - mono(p) * s2;
    Ok((lhs, rhs))
}

#[test]
fn f_and_g_share_functional_equation() {
    let order = o(30);
    for (i, abc) in [(1, 2, 1), (2, 3, 2), (1, 3, 2)].into_iter().enumerate() {
        let (a, b, cc) = abc;
        for_generic(
            700 + i as u64,
            3,
            |r| (random_mono(r, 2), random_mono(r, 2)),
            |(x, y)| shared_equation(abc, x, y, |x, y| f(a, b, cc, x, y, &q(1))),
            &order,
        );
        for_generic(
            710 + i as u64,
            3,
            |r| (random_mono(r, 2), random_mono(r, 2)),
            |(x, y)| {
                shared_equation(abc, x, y, |x, y| {
                    g_abc_node(a, b, cc, x, y, &q(1), &c(-1), &c(-1))
                })
            },
            &order,
        );
    }
}

#[test]
fn h_matches_g_for_121() {
    let order = o(30);
    for_generic(
        800,
        4,
        |r| (random_mono(r, 2), random_mono(r, 2)),
        |(x, y)| {
            let m1 = c(-1);
            Ok((
                h_abc_node(1, 2, 1, x, y, &q(1), &m1, &m1)?,
                g_abc_node(1, 2, 1, x, y, &q(1), &m1, &m1)?,
            ))
        },
        &order,
    );
}

#[test]
fn h_is_periodic_in_z() {
    let order = o(30);
    for_generic(
        801,
        3,
        |r| {
            (
                random_mono(r, 2),
                random_mono(r, 2),
                random_mono(r, 2),
                random_mono(r, 2),
            )
        },
        |(x, y, z1, z0)| {
            // b^2/a - c = 3 and b^2/c - a = 3 for (1,2,1)
            let lhs = h_abc_node(1, 2, 1, x, y, &q(1), z1, z0)?;
            let rhs = h_abc_node(1, 2, 1, x, y, &q(1), &(z1 * &q(3)), &(z0 * &q(-3)))?;
            Ok((lhs, rhs))
        },
        &order,
    );
}

#[test]
fn level_one_string_functions() {
    let order = o(60);
    let p = jb(&q(1), 1);
    for (m, l) in [(0, 0), (1, 1), (2, 0), (3, 1)] {
        let expect = mono(QMonomial::q(BigRat::new(m * m - l * l, 4))) / p.clone();
        let got = string_function_node(1, m, l).unwrap();
        assert!(
            got.eval(&order)
                .unwrap()
                .agrees_with(&expect.eval(&order).unwrap(), &order),
            "C^1_{{{m},{l}}}"
        );
    }
}

#[test]
fn string_functions_match_double_sum() {
    let order = o(50);
    for (n, m, l) in [
        (2, 0, 0),
        (2, 1, 1),
        (2, 2, 2),
        (3, 1, 1),
        (3, 0, 2),
        (4, 2, 0),
    ] {
        let got = string_function_node(n, m, l).unwrap().eval(&order).unwrap();
        let num = Node::leaf("oracle", move |o| string_numerator_oracle(n, m, l, o));
        let expect = (num / jb(&q(1), 1).pow(3)).eval(&order).unwrap();
        assert!(got.agrees_with(&expect, &order), "C^{n}_{{{m},{l}}}");
    }
}
