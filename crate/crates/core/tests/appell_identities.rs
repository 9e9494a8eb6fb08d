mod common;

use common::*;
use mockq::appell::*;
use mockq::euler::g_node;
use mockq::theta::j_node;
use mockq::{Node, QMonomial};

fn mono(m: QMonomial) -> Node {
    Node::mono(&m)
}

#[test]
fn changing_z() {
    let order = o(40);
    for_generic(
        1,
        6,
        |r| (random_mono(r, 3), random_mono(r, 3), random_mono(r, 3)),
        |(x, z0, z1)| {
            let b = q(1);
            let lhs = m_node(x, &b, z1)? - m_node(x, &b, z0)?;
            Ok((lhs, changing_z_node(x, &b, z0, z1)?))
        },
        &order,
    );
}

#[test]
fn functional_equations() {
    let order = o(30);
    for_generic(
        2,
        5,
        |r| (random_mono(r, 3), random_mono(r, 3)),
        |(x, z)| {
            let b = q(1);
            let xi = x.powi(-1);
            let eqs = [
                (m_node(x, &b, z)?, m_node(x, &b, &(&b * z))?),
                (
                    m_node(x, &b, z)?,
                    mono(xi.clone()) * m_node(&xi, &b, &z.powi(-1))?,
                ),
                (
                    m_node(&(&b * x), &b, z)?,
                    Node::one() - mono(x.clone()) * m_node(x, &b, z)?,
                ),
                (
                    m_node(x, &b, z)?,
                    Node::one() - mono(x / &b) * m_node(&(x / &b), &b, z)?,
                ),
                (
                    m_node(x, &b, z)?,
                    mono(xi.clone()) - mono(xi.clone()) * m_node(&(&b * x), &b, z)?,
                ),
                (m_node(x, &b, z)?, m_node(x, &b, &(&xi * &z.powi(-1)))?),
            ];
            let (l, r): (Vec<_>, Vec<_>) = eqs.into_iter().unzip();
            // weight each equation by a distinct power of 2 so a single failure shows
            let w = |v: Vec<Node>| {
                Node::sum(
                    v.into_iter()
                        .enumerate()
                        .map(|(i, n)| Node::int(1 << i) * n)
                        .collect(),
                )
            };
            Ok((w(l), w(r)))
        },
        &order,
    );
}

#[test]
fn split_general() {
    let order = o(30);
    for n in [2, 3] {
        for_generic(
            10 + n as u64,
            3,
            |r| (random_mono(r, 2), random_mono(r, 2), random_mono(r, 2)),
            |(x, z, zp)| Ok((m_node(x, &q(1), z)?, m_split_node(x, &q(1), z, zp, n)?)),
            &order,
        );
    }
}

#[test]
fn split_corollaries() {
    let order = o(40);
    for_generic(
        20,
        4,
        |r| (random_mono(r, 2), random_mono(r, 2)),
        |(x, z)| Ok((m_node(x, &q(1), z)?, m_split2_node(x, &q(1), z)?)),
        &order,
    );
    for_generic(
        21,
        4,
        |r| random_mono(r, 2),
        |x| Ok((m_node(x, &q(1), &c(-1))?, m_split3_node(x, &q(1))?)),
        &order,
    );
}

#[test]
fn roots_of_unity() {
    let order = o(30);
    for (n, k) in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
        for_generic(
            30 + (n * 10 + k) as u64,
            2,
            |r| (random_mono(r, 2), random_mono(r, 2), random_mono(r, 2)),
            |(x, z, zp)| {
                Ok((
                    roots_of_unity_lhs(x, &q(1), z, n, k)?,
                    roots_of_unity_rhs(x, &q(1), z, zp, n, k)?,
                ))
            },
            &order,
        );
    }
}

#[test]
fn g_h_k_to_m() {
    let order = o(40);
    let b = q(1);
    for_generic(
        40,
        4,
        |r| random_mono(r, 2),
        |x| {
            let rhs = mono(-&x.powi(-1)) * m_node(&(&q(2) * &x.powi(-3)), &q(3), &x.powi(2))?
                - mono(x.powi(-2)) * m_node(&(&q(1) * &x.powi(-3)), &q(3), &x.powi(2))?;
            Ok((g_node(x, &b), rhs))
        },
        &order,
    );
    for_generic(
        41,
        4,
        |r| random_mono(r, 2),
        |x| {
            Ok((
                h_node(x, &b)?,
                mono(-&x.powi(-1)) * m_node(&(&x.powi(-2) * &q(1)), &q(2), x)?,
            ))
        },
        &order,
    );
    for_generic(
        42,
        4,
        |r| random_mono(r, 2),
        |x| {
            let lhs = mono(x.clone()) * k_node(x, &b)?;
            let x4 = x.powi(4);
            let z = -&(&x.powi(-2) * &q(-1));
            let a = m_node(&-&(&q(1) * &x4), &q(4), &z)?
                + mono(&q(-1) * &x.powi(2)) * m_node(&-&(&q(-1) * &x4), &q(4), &z)?;
            Ok((lhs, a))
        },
        &order,
    );
    for_generic(
        43,
        4,
        |r| random_mono(r, 2),
        |x| {
            let lhs = mono(x.clone()) * k_node(x, &b)?;
            let j1 = jb(&b, 1);
            let j2 = jb(&b, 2);
            let quo = j1.pow(4) / (Node::int(2) * j2.pow(2) * j_node(&x.powi(2), &b));
            Ok((lhs, m_node(&-&x.powi(2), &b, &x.powi(-2))? + quo))
        },
        &order,
    );
}
