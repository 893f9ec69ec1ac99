//! Deterministic builders for finite groups, their function and group
//! algebras, Sweedler's four-dimensional Hopf algebra, and the bundles every
//! test and example runs on.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bundle::{check_bundle, Bundle, BundleData};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::hopf::{check_hopf, Corep, HopfAlgebra, HopfData};

/// A finite group by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates the table: closure, associativity, a two-sided identity and inverses.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |msg: String| Error::Malformed(format!("group {name}: {msg}"));
        if labels.len() != n || n == 0 {
            return Err(bad(format!("{} labels for a table of order {n}", labels.len())));
        }
        if let Some(r) = table
            .iter()
            .position(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(bad(format!("row {r} is not a map into the group")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity".into()))?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| bad(format!("element {g} has no inverse")))
            })
            .collect::<Result<_>>()?;
        Ok(GroupTable {
            name,
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// `Z/n` with element `k` at index `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "Z/0 is not finite");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| format!("g{k}")).collect();
        GroupTable::new(format!("Z/{n}"), labels, table).expect("cyclic table is a group")
    }

    /// `S_n` for `n ≤ 4`, elements in lexicographic order of their images and
    /// `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=4).contains(&n), "symmetric groups are built for n ≤ 4");
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("p{}", p.iter().map(usize::to_string).collect::<String>()))
            .collect();
        GroupTable::new(format!("S{n}"), labels, table).expect("permutation table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// A right action `(p, g) ↦ p·g` of a group on a finite set. Freeness is not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSetAction {
    name: String,
    group: GroupTable,
    /// `action[p][g] = p·g`.
    action: Vec<Vec<usize>>,
}

impl GSetAction {
    /// Validates `p·e = p` and `(p·g)·h = p·(gh)`.
    pub fn from_grid(name: impl Into<String>, group: GroupTable, action: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let points = action.len();
        let n = group.order();
        let bad = |msg: String| Error::Malformed(format!("action {name}: {msg}"));
        if let Some(p) = action
            .iter()
            .position(|r| r.len() != n || r.iter().any(|&q| q >= points))
        {
            return Err(bad(format!("row {p} is not a map into the points")));
        }
        for (p, row) in action.iter().enumerate() {
            if row[group.identity()] != p {
                return Err(bad(format!("identity moves point {p}")));
            }
            for g in 0..n {
                for h in 0..n {
                    if action[row[g]][h] != row[group.mul(g, h)] {
                        return Err(bad(format!("(p·g)·h ≠ p·(gh) at ({p}, {g}, {h})")));
                    }
                }
            }
        }
        Ok(GSetAction { name, group, action })
    }

    /// `G` acting on itself by right multiplication.
    pub fn regular(group: GroupTable) -> Self {
        let n = group.order();
        let action = (0..n).map(|p| (0..n).map(|g| group.mul(p, g)).collect()).collect();
        let name = format!("{}-regular", group.name());
        GSetAction::from_grid(name, group, action).expect("regular action")
    }

    /// `copies` disjoint copies of the regular action; point `(c, g)` has index `c·|G| + g`.
    pub fn free_copies(group: GroupTable, copies: usize) -> Self {
        let n = group.order();
        let action = (0..copies * n)
            .map(|p| {
                let (c, x) = (p / n, p % n);
                (0..n).map(|g| c * n + group.mul(x, g)).collect()
            })
            .collect();
        let name = format!("{}-free{}", group.name(), copies * n);
        GSetAction::from_grid(name, group, action).expect("free action")
    }

    /// `Z/2` swapping points 0 and 1 and fixing point 2.
    pub fn z2_one_fixed_point() -> Self {
        let action = vec![vec![0, 1], vec![1, 0], vec![2, 2]];
        GSetAction::from_grid("Z/2-nonfree3", GroupTable::cyclic(2), action).expect("swap action")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.action.len()
    }

    pub fn act(&self, p: usize, g: usize) -> usize {
        self.action[p][g]
    }

    /// No point is fixed by a non-identity element.
    pub fn is_free(&self) -> bool {
        let e = self.group.identity();
        self.action
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(g, &q)| g == e || q != p))
    }
}

fn checked_hopf(data: HopfData) -> HopfAlgebra {
    let name = data.name.clone();
    let h = HopfAlgebra::from_data(data).unwrap_or_else(|e| panic!("{name}: {e}"));
    let report = check_hopf(&h);
    assert!(report.ok, "{name} fails its axioms: {:?}", report.violations);
    h
}

/// Functions on `G`: pointwise product on `δ_g`, `Δδ_g = Σ_{hk=g} δ_h ⊗ δ_k`,
/// `S(δ_g) = δ_{g⁻¹}`, real structure `δ_g* = δ_g`.
pub fn fn_algebra(g: &GroupTable) -> HopfAlgebra {
    let n = g.order();
    let one = Scalar::one;
    let mut comult = Vec::new();
    for h in 0..n {
        for k in 0..n {
            comult.push((g.mul(h, k), h, k, one()));
        }
    }
    checked_hopf(HopfData {
        name: format!("k^{}", g.name()),
        labels: g.labels().iter().map(|l| format!("d{l}")).collect(),
        mult: (0..n).map(|i| (i, i, i, one())).collect(),
        unit: (0..n).map(|i| (i, one())).collect(),
        comult,
        counit: vec![(g.identity(), one())],
        antipode: (0..n).map(|i| (i, g.inverse(i), one())).collect(),
        involution: Some((0..n).map(|i| (i, i, one())).collect()),
    })
}

/// The group algebra `kG`: `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g* = g⁻¹`.
pub fn group_algebra(g: &GroupTable) -> HopfAlgebra {
    let n = g.order();
    let one = Scalar::one;
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push((a, b, g.mul(a, b), one()));
        }
    }
    let inverse: Vec<_> = (0..n).map(|i| (i, g.inverse(i), one())).collect();
    checked_hopf(HopfData {
        name: format!("k{}", g.name()),
        labels: g.labels().to_vec(),
        mult,
        unit: vec![(g.identity(), one())],
        comult: (0..n).map(|i| (i, i, i, one())).collect(),
        counit: (0..n).map(|i| (i, one())).collect(),
        antipode: inverse.clone(),
        involution: Some(inverse),
    })
}

/// Sweedler's algebra on `{1, g, x, gx}`: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`. Here `S² ≠ id`.
pub fn sweedler() -> HopfAlgebra {
    // g^a x^b sits at index a + 2b
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = Vec::new();
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                mult.push((idx(a, b), idx(c, d), idx((a + c) % 2, b + d), Scalar::from_int(sign)));
            }
        }
    }
    let one = Scalar::one;
    checked_hopf(HopfData {
        name: "H4".into(),
        labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mult,
        unit: vec![(0, one())],
        comult: vec![
            (0, 0, 0, one()),
            (1, 1, 1, one()),
            (2, 2, 0, one()),
            (2, 1, 2, one()),
            (3, 3, 1, one()),
            (3, 0, 3, one()),
        ],
        counit: vec![(0, one()), (1, one())],
        antipode: vec![
            (0, 0, one()),
            (1, 1, one()),
            (2, 3, Scalar::from_int(-1)),
            (3, 2, one()),
        ],
        involution: None,
    })
}

fn checked_bundle(hopf: Arc<HopfAlgebra>, data: BundleData) -> Result<Bundle> {
    let name = data.name.clone();
    let p = Bundle::from_data(hopf, data)?;
    let report = check_bundle(&p);
    if !report.ok {
        let list: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::Construction(format!("bundle {name}: {}", list.join(", "))));
    }
    Ok(p)
}

/// `B = A` as an algebra, coacting on itself by `Δ`.
pub fn trivial_bundle(h: Arc<HopfAlgebra>) -> Result<Bundle> {
    let data = h.to_data();
    let bundle = BundleData {
        name: format!("trivial({})", h.name()),
        labels: data.labels,
        mult: data.mult,
        unit: data.unit,
        coaction: data.comult,
    };
    checked_bundle(h, bundle)
}

/// Functions on the points with `F(δ_p) = Σ_g δ_{p·g⁻¹} ⊗ δ_g`, that is `F(f)(p, g) = f(p·g)`.
pub fn gset_bundle(a: &GSetAction) -> Result<Bundle> {
    let g = a.group();
    let n = a.points();
    let one = Scalar::one;
    let mut coaction = Vec::new();
    for q in 0..n {
        for x in 0..g.order() {
            coaction.push((a.act(q, x), q, x, one()));
        }
    }
    let data = BundleData {
        name: a.name().to_string(),
        labels: (0..n).map(|p| format!("p{p}")).collect(),
        mult: (0..n).map(|i| (i, i, i, one())).collect(),
        unit: (0..n).map(|i| (i, one())).collect(),
        coaction,
    };
    checked_bundle(Arc::new(fn_algebra(g)), data)
}

/// Groups with built-in irreducible corepresentation lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupName {
    Cyclic(usize),
    S3,
}

impl GroupName {
    pub fn table(self) -> GroupTable {
        match self {
            GroupName::Cyclic(n) => GroupTable::cyclic(n),
            GroupName::S3 => GroupTable::symmetric(3),
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "Z/{n}"),
            GroupName::S3 => f.write_str("S3"),
        }
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "S3" {
            return Ok(GroupName::S3);
        }
        s.strip_prefix("Z/")
            .and_then(|n| n.parse().ok())
            .filter(|&n| (1..=24).contains(&n))
            .map(GroupName::Cyclic)
            .ok_or_else(|| Error::Unsupported(format!("no built-in irreducibles for group {s:?}")))
    }
}

/// Irreducible corepresentations of `k^G`: the characters `χ_k(g) = ζ_n^{gk}`
/// of `Z/n`, and trivial, sign and standard for `S3`.
///
/// `h` must be [`fn_algebra`] of the named group.
pub fn builtin_irreps(name: GroupName, h: &Arc<HopfAlgebra>) -> Result<Vec<Corep>> {
    let g = name.table();
    let n = g.order();
    if h.dim() != n || !same_structure(h, &fn_algebra(&g)) {
        return Err(Error::Unsupported(format!(
            "built-in irreducibles of {name} need the function algebra k^{name}, got {}",
            h.name()
        )));
    }
    match name {
        GroupName::Cyclic(n) => (0..n)
            .map(|k| {
                let chi = (0..n)
                    .map(|x| Scalar::root_of_unity(n as u32, ((x * k) % n) as u32))
                    .collect();
                Corep::new(h.clone(), format!("chi{k}"), 1, vec![chi])
            })
            .collect(),
        GroupName::S3 => {
            let perms = permutations(3);
            let sign = perms.iter().map(|p| Scalar::from_int(permutation_sign(p))).collect();
            // σ on w_j = e_j − e_2 gives e_σ(j) − e_σ(2); read off the w_0, w_1 components
            let mut standard = vec![vec![Scalar::zero(); n]; 4];
            for (x, s) in perms.iter().enumerate() {
                for j in 0..2 {
                    let mut image = [0i64; 3];
                    image[s[j]] += 1;
                    image[s[2]] -= 1;
                    for i in 0..2 {
                        standard[i * 2 + j][x] = Scalar::from_int(image[i]);
                    }
                }
            }
            Ok(vec![
                Corep::trivial(h.clone()),
                Corep::new(h.clone(), "sign", 1, vec![sign])?,
                Corep::new(h.clone(), "standard", 2, standard)?,
            ])
        }
    }
}

/// Equal structure constants, ignoring names and labels.
fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    let (a, b) = (a.to_data(), b.to_data());
    (a.mult, a.unit, a.comult, a.counit, a.antipode) == (b.mult, b.unit, b.comult, b.counit, b.antipode)
}

/// The group `G` with `h ≅ k^G` on the nose, among the groups with built-in irreducibles.
pub fn recognize_group(h: &HopfAlgebra) -> Option<GroupName> {
    let n = h.dim();
    let mut candidates = vec![GroupName::Cyclic(n)];
    if n == 6 {
        candidates.push(GroupName::S3);
    }
    candidates
        .into_iter()
        .find(|g| same_structure(h, &fn_algebra(&g.table())))
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A named corpus bundle together with its built-in irreducibles, when it has them.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub bundle: Bundle,
    pub irreps: Option<Vec<Corep>>,
}

/// Registry names accepted by [`example`].
pub const EXAMPLES: &[&str] = &[
    "z2-regular",
    "z2-trivial",
    "z2-free4",
    "z2-nonfree3",
    "z3-regular",
    "s3-regular",
    "s3-free12",
    "sweedler-trivial",
];

pub fn example(name: &str) -> Result<Example> {
    let name = EXAMPLES
        .iter()
        .copied()
        .find(|&n| n == name)
        .ok_or_else(|| Error::Unsupported(format!("no example named {name:?}; known: {}", EXAMPLES.join(", "))))?;
    let gset = |action: GSetAction, group: GroupName| -> Result<(Bundle, Option<GroupName>)> {
        Ok((gset_bundle(&action)?, Some(group)))
    };
    let (bundle, group) = match name {
        "z2-regular" => gset(GSetAction::regular(GroupTable::cyclic(2)), GroupName::Cyclic(2))?,
        "z2-trivial" => (
            trivial_bundle(Arc::new(fn_algebra(&GroupTable::cyclic(2))))?,
            Some(GroupName::Cyclic(2)),
        ),
        "z2-free4" => gset(GSetAction::free_copies(GroupTable::cyclic(2), 2), GroupName::Cyclic(2))?,
        "z2-nonfree3" => gset(GSetAction::z2_one_fixed_point(), GroupName::Cyclic(2))?,
        "z3-regular" => gset(GSetAction::regular(GroupTable::cyclic(3)), GroupName::Cyclic(3))?,
        "s3-regular" => gset(GSetAction::regular(GroupTable::symmetric(3)), GroupName::S3)?,
        "s3-free12" => gset(GSetAction::free_copies(GroupTable::symmetric(3), 2), GroupName::S3)?,
        "sweedler-trivial" => (trivial_bundle(Arc::new(sweedler()))?, None),
        _ => unreachable!("registry and match agree"),
    };
    let bundle = bundle.with_name(name);
    let irreps = group.map(|g| builtin_irreps(g, bundle.hopf())).transpose()?;
    Ok(Example { name, bundle, irreps })
}

/// Every Hopf algebra the corpus builds, for axiom sweeps.
pub fn hopf_algebras() -> Vec<HopfAlgebra> {
    vec![
        fn_algebra(&GroupTable::cyclic(2)),
        fn_algebra(&GroupTable::cyclic(3)),
        fn_algebra(&GroupTable::symmetric(3)),
        group_algebra(&GroupTable::cyclic(2)),
        group_algebra(&GroupTable::symmetric(3)),
        sweedler(),
    ]
}
