//! Constructors for the example families, as explicit permutation groups with
//! named elements and subgroups. Every entry re-verifies its defining
//! relations and closed-form order at construction instead of trusting the
//! data.

use std::collections::BTreeMap;

use crate::error::CatalogError;
use crate::group::Group;
use crate::perm::Perm;

/// A named example group: the group, its named elements and subgroups, and the
/// parameters it was built with.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Group,
    pub elements: BTreeMap<String, Perm>,
    pub subgroups: BTreeMap<String, Group>,
    pub params: BTreeMap<String, i64>,
}

impl CatalogEntry {
    pub fn element(&self, name: &str) -> Option<&Perm> {
        self.elements.get(name)
    }

    pub fn subgroup(&self, name: &str) -> Option<&Group> {
        self.subgroups.get(name)
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), CatalogError> {
    if cond {
        Ok(())
    } else {
        Err(CatalogError::DataCorrupt(what.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PetersenVariant {
    A5,
    S5,
}

/// The Petersen graph as a coset graph: vertices are the 2-subsets of a
/// 5-point set, H is the stabiliser of {1,2}, g = (0 2)(1 3) reverses the base
/// arc, and J = ⟨g⟩ gives the 2-extender. L = ⟨b,g⟩ recovers the simple graph.
pub fn petersen(variant: PetersenVariant) -> Result<CatalogEntry, CatalogError> {
    let degree = 5;
    let r = Perm::from_cycles(degree, &[&[0, 3, 4]]);
    let b = Perm::from_cycles(degree, &[&[1, 2], &[3, 4]]);
    let g = Perm::from_cycles(degree, &[&[1, 3], &[2, 4]]);
    let s = Perm::from_cycles(degree, &[&[3, 4]]);

    let mut elements = BTreeMap::new();
    elements.insert("r".to_string(), r.clone());
    elements.insert("b".to_string(), b.clone());
    elements.insert("g".to_string(), g.clone());

    let (name, group, h, l) = match variant {
        PetersenVariant::A5 => {
            let group = Group::generated(degree, &[r.clone(), b.clone(), g.clone()])?;
            let h = Group::generated(degree, &[r.clone(), b.clone()])?;
            let l = Group::generated(degree, &[b.clone(), g.clone()])?;
            ensure(group.order() == 60, "|A5| = 60")?;
            ensure(h.order() == 6, "|H| = 6")?;
            ensure(l.order() == 4, "|L| = 4")?;
            ("petersen-a5", group, h, l)
        }
        PetersenVariant::S5 => {
            elements.insert("s".to_string(), s.clone());
            let group = Group::generated(degree, &[r.clone(), b.clone(), g.clone(), s.clone()])?;
            let h = Group::generated(degree, &[r.clone(), b.clone(), s.clone()])?;
            let l = Group::generated(degree, &[b.clone(), g.clone(), s.clone()])?;
            ensure(group.order() == 120, "|S5| = 120")?;
            ensure(h.order() == 12, "|H| = 12")?;
            ensure(l.order() == 8, "|L| = 8")?;
            ("petersen-s5", group, h, l)
        }
    };
    let j = Group::cyclic(&g);
    let mut subgroups = BTreeMap::new();
    subgroups.insert("H".to_string(), h);
    subgroups.insert("J".to_string(), j);
    subgroups.insert("L".to_string(), l);
    Ok(CatalogEntry {
        name: name.to_string(),
        group,
        elements,
        subgroups,
        params: BTreeMap::new(),
    })
}

/// The hypercube family: A acts faithfully on 2n + nλ points, the first 2n of
/// which carry the coordinate flips v_i and the last nλ a regular cycle for a.
///
/// Relations: v_i^a = v_{i+1}, v_i^x = v_{n-i}, a^x = a⁻¹; z = v₀. The
/// index-2 subgroups X = ⟨a,z⟩ and Y = ⟨a,zx⟩ carry the rotary pairs.
pub fn hypercube(n: usize, lambda: usize) -> Result<CatalogEntry, CatalogError> {
    if n < 3 || lambda < 1 {
        return Err(CatalogError::BadParams(format!(
            "need n ≥ 3 and λ ≥ 1, got n={n}, λ={lambda}"
        )));
    }
    let degree = 2 * n + n * lambda;
    let tail = |j: usize| 2 * n + j;

    let mut a_img: Vec<usize> = (0..degree).collect();
    for eps in 0..2 {
        for i in 0..n {
            a_img[eps * n + i] = eps * n + (i + 1) % n;
        }
    }
    for j in 0..n * lambda {
        a_img[tail(j)] = tail((j + 1) % (n * lambda));
    }
    let a = Perm::from_images(a_img)?;

    let mut x_img: Vec<usize> = (0..degree).collect();
    for eps in 0..2 {
        for i in 0..n {
            x_img[eps * n + i] = eps * n + (n - i) % n;
        }
    }
    for j in 0..n * lambda {
        x_img[tail(j)] = tail((n * lambda - j) % (n * lambda));
    }
    let x = Perm::from_images(x_img)?;

    let v = |i: usize| {
        let mut img: Vec<usize> = (0..degree).collect();
        img.swap(i, n + i);
        Perm::from_images(img).expect("coordinate flip is a permutation")
    };
    let z = v(0);
    let y = &a * &x;
    let zx = &z * &x;

    // defining relations
    for i in 0..n {
        ensure(v(i).conj(&a) == v((i + 1) % n), "v_i^a = v_{i+1}")?;
        ensure(v(i).conj(&x) == v((n - i) % n), "v_i^x = v_{n-i}")?;
    }
    ensure(a.conj(&x) == a.inverse(), "a^x = a⁻¹")?;
    ensure(a.order() as usize == n * lambda, "|a| = nλ")?;
    ensure(&z * &x == &x * &z, "v₀ commutes with x")?;

    let group = Group::generated(degree, &[a.clone(), x.clone(), z.clone()])?;
    let closed_form = (1usize << (n + 1)) * n * lambda;
    ensure(group.order() == closed_form, "|A| = 2^{n+1}nλ")?;

    let x_sub = Group::generated(degree, &[a.clone(), z.clone()])?;
    let y_sub = Group::generated(degree, &[a.clone(), zx.clone()])?;
    ensure(x_sub.order() == closed_form / 2, "|X| = |A|/2")?;
    ensure(y_sub.order() == closed_form / 2, "|Y| = |A|/2")?;
    let h = Group::generated(degree, &[a.clone(), x.clone()])?;
    let j = Group::generated(degree, &[x.clone(), z.clone()])?;
    ensure(h.order() == 2 * n * lambda, "|H| = 2nλ")?;
    ensure(j.order() == 4, "|J| = 4")?;

    let mut elements = BTreeMap::new();
    elements.insert("a".to_string(), a);
    elements.insert("x".to_string(), x);
    elements.insert("z".to_string(), z);
    elements.insert("y".to_string(), y);
    elements.insert("zx".to_string(), zx);
    for i in 0..n {
        elements.insert(format!("v{i}"), v(i));
    }
    let mut subgroups = BTreeMap::new();
    subgroups.insert("X".to_string(), x_sub);
    subgroups.insert("Y".to_string(), y_sub);
    subgroups.insert("H".to_string(), h);
    subgroups.insert("J".to_string(), j);
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n as i64);
    params.insert("lambda".to_string(), lambda as i64);
    Ok(CatalogEntry {
        name: format!("hypercube-{n}-{lambda}"),
        group,
        elements,
        subgroups,
        params,
    })
}

/// The complete-bipartite family on λ + 2n points: b shifts the λ-block, c₁
/// and c₂ shift the two n-blocks, z multiplies the λ-block by μ+δ and negates
/// the second n-block, and a = bc₁c₂.
///
/// Requires n odd ≥ 3, λ even > 2, gcd(λ,n) = 1, and (μ+δ)² ≡ 1 (mod λ) for
/// z to be an involution on ⟨b⟩ (fails for odd μ > 3).
pub fn knn(n: usize, lambda: usize) -> Result<CatalogEntry, CatalogError> {
    if n < 3
        || n.is_multiple_of(2)
        || lambda <= 2
        || !lambda.is_multiple_of(2)
        || gcd(n, lambda) != 1
    {
        return Err(CatalogError::BadParams(format!(
            "need n odd ≥ 3, λ even > 2, gcd(λ,n)=1; got n={n}, λ={lambda}"
        )));
    }
    let mu = lambda / 2;
    let delta = if mu.is_multiple_of(2) { 1 } else { 2 };
    let factor = mu + delta;
    if (factor * factor) % lambda != 1 {
        return Err(CatalogError::IllDefined(format!(
            "(μ+δ)² = {} ≢ 1 (mod λ={lambda}); z would not be an involution on ⟨b⟩",
            factor * factor
        )));
    }
    let degree = lambda + 2 * n;
    let first = |i: usize| lambda + i;
    let second = |i: usize| lambda + n + i;

    let mut b_img: Vec<usize> = (0..degree).collect();
    for (j, slot) in b_img.iter_mut().enumerate().take(lambda) {
        *slot = (j + 1) % lambda;
    }
    let b = Perm::from_images(b_img)?;

    let mut c1_img: Vec<usize> = (0..degree).collect();
    for i in 0..n {
        c1_img[first(i)] = first((i + 1) % n);
    }
    let c1 = Perm::from_images(c1_img)?;

    let mut c2_img: Vec<usize> = (0..degree).collect();
    for i in 0..n {
        c2_img[second(i)] = second((i + 1) % n);
    }
    let c2 = Perm::from_images(c2_img)?;

    let mut z_img: Vec<usize> = (0..degree).collect();
    for (j, slot) in z_img.iter_mut().enumerate().take(lambda) {
        *slot = (j * factor) % lambda;
    }
    for i in 0..n {
        z_img[second(i)] = second((n - i) % n);
    }
    let z = Perm::from_images(z_img)?;

    ensure(z.order() == 2, "|z| = 2")?;
    ensure(c1.conj(&z) == c1, "c₁^z = c₁")?;
    ensure(c2.conj(&z) == c2.inverse(), "c₂^z = c₂⁻¹")?;
    ensure(b.conj(&z) == b.pow(factor as i64), "b^z = b^{μ+δ}")?;

    let a = &(&b * &c1) * &c2;
    ensure(a.order() as usize == lambda * n, "|a| = λn")?;
    let group = Group::generated(degree, &[b.clone(), c1.clone(), c2.clone(), z.clone()])?;
    ensure(group.order() == 2 * lambda * n * n, "|G| = 2λn²")?;
    ensure(
        Group::generated(degree, &[a.clone(), z.clone()])?.order() == group.order(),
        "G = ⟨a,z⟩",
    )?;

    let mut elements = BTreeMap::new();
    elements.insert("b".to_string(), b);
    elements.insert("c1".to_string(), c1);
    elements.insert("c2".to_string(), c2);
    elements.insert("z".to_string(), z);
    elements.insert("a".to_string(), a);
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n as i64);
    params.insert("lambda".to_string(), lambda as i64);
    params.insert("mu".to_string(), mu as i64);
    params.insert("delta".to_string(), delta as i64);
    Ok(CatalogEntry {
        name: format!("knn-{n}-{lambda}"),
        group,
        elements,
        subgroups: BTreeMap::new(),
        params,
    })
}

// Degree-18 generators for the non-split triple cover of A6, frozen from an
// offline coset enumeration inside SL(3,4) and re-verified below. Points are
// grouped in blocks of three (the orbits of the centre); the induced action
// on blocks realises the A6 quotient with b ↦ (0 1 2 3 4), z ↦ (2 3)(4 5).
const THREE_A6_B: [usize; 18] = [4, 5, 3, 7, 8, 6, 9, 10, 11, 14, 12, 13, 2, 0, 1, 15, 16, 17];
const THREE_A6_Z: [usize; 18] = [0, 1, 2, 3, 4, 5, 11, 9, 10, 7, 8, 6, 16, 17, 15, 14, 12, 13];
const THREE_A6_C: [usize; 18] = [1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12, 16, 17, 15];

/// The triple cover of A6, with the rotary pairs (a,z) and (a¹¹,z) on the same
/// subgroup triple. a = bc has order 15, a¹⁰ = c generates the centre, and
/// |zz^a| = 5.
pub fn three_a6() -> Result<CatalogEntry, CatalogError> {
    let b = Perm::from_images(THREE_A6_B.to_vec())?;
    let z = Perm::from_images(THREE_A6_Z.to_vec())?;
    let c = Perm::from_images(THREE_A6_C.to_vec())?;
    ensure(b.order() == 5, "|b| = 5")?;
    ensure(z.order() == 2, "|z| = 2")?;
    ensure(c.order() == 3, "|c| = 3")?;

    let group = Group::generated(18, &[b.clone(), z.clone()])?;
    ensure(group.order() == 1080, "|G| = 1080")?;
    let center = group.center();
    ensure(
        center.order() == 3 && center.contains(&c),
        "Z(G) = ⟨c⟩ ≅ Z₃",
    )?;
    ensure(group.is_perfect(), "G is perfect")?;

    // induced action on the six centre-orbit blocks {3i, 3i+1, 3i+2}
    let block_image = |p: &Perm| -> Vec<usize> { (0..6).map(|i| p.apply(3 * i) / 3).collect() };
    ensure(
        block_image(&b) == vec![1, 2, 3, 4, 0, 5],
        "b acts on blocks as (0 1 2 3 4)",
    )?;
    ensure(
        block_image(&z) == vec![0, 1, 3, 2, 5, 4],
        "z acts on blocks as (2 3)(4 5)",
    )?;
    for i in 0..6 {
        ensure(c.apply(3 * i) / 3 == i, "centre preserves each block")?;
    }
    // the block action has kernel exactly the centre, so the quotient is the
    // simple group of order 360 generated by those two images
    let block_perms: Vec<Perm> = group
        .generators()
        .iter()
        .map(|p| Perm::from_images(block_image(p)).expect("blocks are permuted"))
        .collect();
    let quotient = Group::generated(6, &block_perms)?;
    ensure(quotient.order() == 360, "G/Z ≅ A6 of order 360")?;

    let a = &b * &c;
    ensure(a.order() == 15, "|a| = 15")?;
    ensure(a.pow(10) == c, "a¹⁰ generates the centre")?;
    let a11 = a.pow(11);
    ensure(
        Group::cyclic(&a).same_group(&Group::cyclic(&a11)),
        "⟨a⟩ = ⟨a¹¹⟩",
    )?;
    ensure(z.conj(&a11) == z.conj(&a), "z^{a¹¹} = z^a")?;
    let zza = &z * &z.conj(&a);
    ensure(zza.order() == 5, "|zz^a| = 5")?;
    ensure(
        Group::generated(18, &[z.clone(), z.conj(&a)])?.order() == 10,
        "⟨z, z^a⟩ ≅ D₁₀",
    )?;

    let mut elements = BTreeMap::new();
    elements.insert("b".to_string(), b);
    elements.insert("z".to_string(), z);
    elements.insert("c".to_string(), c);
    elements.insert("a".to_string(), a);
    elements.insert("a11".to_string(), a11);
    Ok(CatalogEntry {
        name: "three-a6".to_string(),
        group,
        elements,
        subgroups: BTreeMap::new(),
        params: BTreeMap::new(),
    })
}

/// G = S₃ × Z_λ acting on 3 + λ points, with H the point stabiliser times the
/// Z factor and J a bare transposition: Cos(G,H,J) is the λ-extended triangle
/// and Core_G(L) is the Z factor.
pub fn core_example(lambda: usize) -> Result<CatalogEntry, CatalogError> {
    if lambda < 2 {
        return Err(CatalogError::BadParams(format!(
            "need λ ≥ 2, got λ={lambda}"
        )));
    }
    let degree = 3 + lambda;
    let h0 = Perm::from_cycles(degree, &[&[1, 2]]);
    let j0 = Perm::from_cycles(degree, &[&[0, 1]]);
    let shift: Vec<usize> = (3..3 + lambda).collect();
    let t = Perm::from_cycles(degree, &[&shift]);

    let group = Group::generated(degree, &[h0.clone(), j0.clone(), t.clone()])?;
    ensure(group.order() == 6 * lambda, "|G| = 6λ")?;
    let h = Group::generated(degree, &[h0.clone(), t.clone()])?;
    let j = Group::cyclic(&j0);
    ensure(h.order() == 2 * lambda, "|H| = 2λ")?;

    let mut elements = BTreeMap::new();
    elements.insert("h".to_string(), h0);
    elements.insert("j".to_string(), j0);
    elements.insert("t".to_string(), t);
    let mut subgroups = BTreeMap::new();
    subgroups.insert("H".to_string(), h);
    subgroups.insert("J".to_string(), j);
    let mut params = BTreeMap::new();
    params.insert("lambda".to_string(), lambda as i64);
    Ok(CatalogEntry {
        name: format!("core-example-{lambda}"),
        group,
        elements,
        subgroups,
        params,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
