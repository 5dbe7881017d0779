//! Constructors for named finite permutation groups.
//!
//! Covers the classical families (symmetric, alternating, cyclic, dihedral),
//! `PSL2(q)` acting on the projective line over `GF(q)`, Frobenius extensions
//! of `PSL2(q)` by field automorphisms, the Mathieu groups `M11`/`M12`/`M22`
//! and Janko groups `J1`/`J2` from shipped generator data, direct products,
//! and a small expression language (`Sym(4) x Cyc(3)`, `PSL2(27):1`, ...)
//! used by the command-line frontend.

use crate::error::{Error, Result};
use crate::gf::FieldGf;
use crate::group::PermGroup;
use crate::perm::{parse_generator_file, Permutation, Point, MAX_DEGREE};

/// n! as a checked `u128`.
fn factorial(n: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=n as u128 {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decompose `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Some((p, k))
    } else {
        None
    }
}

fn check_point_count(n: u64, what: &str) -> Result<usize> {
    if n as usize > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n as usize });
    }
    if n == 0 {
        return Err(Error::Constructor(format!("{what}: n must be at least 1")));
    }
    Ok(n as usize)
}

/// The symmetric group on `n` points (order `n!`); `n = 1` gives the trivial
/// group of degree 1.
pub fn symmetric(n: u64) -> Result<PermGroup> {
    let deg = check_point_count(n, "symmetric(n)")?;
    if deg == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let transposition = plain_cycle(deg, &[0, 1]);
    let full_cycle = plain_cycle(deg, &(0..deg).collect::<Vec<_>>());
    let group = PermGroup::new(vec![transposition, full_cycle])?;
    let expected = factorial(n).ok_or(Error::Overflow)?;
    assert_eq!(group.order(), expected, "symmetric({n}) order check");
    Ok(group)
}

/// The alternating group on `n` points (order `n!/2` for `n >= 2`); `n <= 2`
/// gives the trivial group of degree `n`.
pub fn alternating(n: u64) -> Result<PermGroup> {
    let deg = check_point_count(n, "alternating(n)")?;
    if deg <= 2 {
        return Ok(PermGroup::trivial(deg));
    }
    let three_cycle = plain_cycle(deg, &[0, 1, 2]);
    // (0..n) is even iff n is odd; for even n use the (n-1)-cycle fixing 0.
    let long: Vec<usize> = if deg % 2 == 1 {
        (0..deg).collect()
    } else {
        (1..deg).collect()
    };
    let group = PermGroup::new(vec![three_cycle, plain_cycle(deg, &long)])?;
    let expected = factorial(n).ok_or(Error::Overflow)? / 2;
    assert_eq!(group.order(), expected, "alternating({n}) order check");
    Ok(group)
}

/// The cyclic group of order `n` acting on `n` points.
pub fn cyclic(n: u64) -> Result<PermGroup> {
    let deg = check_point_count(n, "cyclic(n)")?;
    if deg == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let group = PermGroup::new(vec![plain_cycle(deg, &(0..deg).collect::<Vec<_>>())])?;
    assert_eq!(group.order(), n as u128, "cyclic({n}) order check");
    Ok(group)
}

/// The dihedral group of order `2n` acting on `n` points (`n >= 3`).
pub fn dihedral(n: u64) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::Constructor(format!(
            "dihedral(n): n must be at least 3, got {n}"
        )));
    }
    let deg = check_point_count(n, "dihedral(n)")?;
    let rotation = plain_cycle(deg, &(0..deg).collect::<Vec<_>>());
    let reflection =
        Permutation::from_images((0..deg).map(|i| ((deg - i) % deg) as Point).collect())
            .expect("reflection is a bijection");
    let group = PermGroup::new(vec![rotation, reflection])?;
    assert_eq!(group.order(), 2 * n as u128, "dihedral({n}) order check");
    Ok(group)
}

/// Build the cycle `(points[0] points[1] ...)` as a permutation of degree `deg`.
fn plain_cycle(deg: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<Point> = (0..deg as Point).collect();
    for w in 0..points.len() {
        images[points[w]] = points[(w + 1) % points.len()] as Point;
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

/// A point of the projective line over `GF(q)`: infinity or a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjPoint {
    Infinity,
    Finite(u64),
}

/// The projective line over a finite field, indexed `[∞, 0, 1, ..., q-1]`
/// (field elements by their canonical encoding). The indexing is the
/// permutation domain for the Möbius action of `PSL2(q)`.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    field: FieldGf,
    points: Vec<ProjPoint>,
}

impl ProjectiveLine {
    pub fn new(field: FieldGf) -> Result<Self> {
        let q = field.q();
        if q as usize + 1 > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange {
                degree: q as usize + 1,
            });
        }
        let mut points = Vec::with_capacity(q as usize + 1);
        points.push(ProjPoint::Infinity);
        points.extend((0..q).map(ProjPoint::Finite));
        Ok(ProjectiveLine { field, points })
    }

    pub fn field(&self) -> &FieldGf {
        &self.field
    }

    /// Number of points, `q + 1`.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    fn index_of(&self, pt: ProjPoint) -> usize {
        match pt {
            ProjPoint::Infinity => 0,
            ProjPoint::Finite(x) => 1 + x as usize,
        }
    }

    /// The permutation induced by the Möbius map `x -> (a·x + b)/(c·x + d)`
    /// (encodings over the field; the matrix must be invertible).
    pub fn mobius(&self, a: u64, b: u64, c: u64, d: u64) -> Result<Permutation> {
        let f = &self.field;
        let det = f.sub(f.mul(a, d), f.mul(b, c));
        if det == 0 {
            return Err(Error::Constructor("mobius: matrix is singular".to_string()));
        }
        let mut images = vec![0 as Point; self.size()];
        for (i, &pt) in self.points.iter().enumerate() {
            let image = match pt {
                ProjPoint::Infinity => {
                    if c == 0 {
                        ProjPoint::Infinity
                    } else {
                        ProjPoint::Finite(f.mul(a, f.inv(c)))
                    }
                }
                ProjPoint::Finite(x) => {
                    let denom = f.add(f.mul(c, x), d);
                    if denom == 0 {
                        ProjPoint::Infinity
                    } else {
                        let numer = f.add(f.mul(a, x), b);
                        ProjPoint::Finite(f.mul(numer, f.inv(denom)))
                    }
                }
            };
            images[i] = self.index_of(image) as Point;
        }
        Permutation::from_images(images)
    }

    /// The permutation fixing `∞` and mapping `x -> x^(p^e)` (a field
    /// automorphism acting on the line).
    pub fn frobenius_perm(&self, e: u32) -> Permutation {
        let mut images = vec![0 as Point; self.size()];
        for (i, &pt) in self.points.iter().enumerate() {
            let image = match pt {
                ProjPoint::Infinity => ProjPoint::Infinity,
                ProjPoint::Finite(x) => ProjPoint::Finite(self.field.frob_iter(x, e)),
            };
            images[i] = self.index_of(image) as Point;
        }
        Permutation::from_images(images).expect("field automorphism is a bijection")
    }
}

/// `|PSL2(q)| = q(q^2 - 1)/gcd(2, q - 1)`.
fn psl2_order(q: u64) -> u128 {
    let q = q as u128;
    q * (q * q - 1) / gcd(2, q - 1)
}

fn psl2_generators(line: &ProjectiveLine) -> Result<Vec<Permutation>> {
    let f = line.field();
    let one = f.encode(&[1]);
    let mut gens = vec![line.mobius(one, one, 0, one)?]; // x -> x + 1
    if f.k() > 1 {
        gens.push(line.mobius(one, f.primitive(), 0, one)?); // x -> x + ω
    }
    gens.push(line.mobius(0, one, f.neg(one), 0)?); // x -> -1/x
    Ok(gens)
}

/// `PSL2(q)` acting on the `q + 1` points of the projective line over
/// `GF(q)`, generated by `x -> x+1`, `x -> x+ω` (for non-prime `q`), and
/// `x -> -1/x`. Requires a prime power `q >= 4`.
pub fn psl2(q: u64) -> Result<PermGroup> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| Error::Constructor(format!("psl2(q): q = {q} is not a prime power")))?;
    if q < 4 {
        return Err(Error::Constructor(format!(
            "psl2(q): q must be at least 4, got {q}"
        )));
    }
    let line = ProjectiveLine::new(FieldGf::new(p, k)?)?;
    let group = PermGroup::new(psl2_generators(&line)?)?;
    let expected = psl2_order(q);
    if group.order() != expected {
        return Err(Error::Constructor(format!(
            "psl2({q}): constructed order {} does not match q(q^2-1)/gcd(2,q-1) = {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// The extension of `PSL2(q)` by the field automorphism `x -> x^(p^e)`
/// acting on the projective line (`∞` fixed). Requires `q = p^k` with
/// `e` a divisor of `k` satisfying `1 <= e < k`; the result has order
/// `|PSL2(q)| · k/e`.
pub fn psl2_frobenius_extension(q: u64, e: u32) -> Result<PermGroup> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| Error::Constructor(format!("psl2(q):e — q = {q} is not a prime power")))?;
    if q < 4 {
        return Err(Error::Constructor(format!(
            "psl2(q):e — q must be at least 4, got {q}"
        )));
    }
    if e == 0 || e >= k || k % e != 0 {
        return Err(Error::Constructor(format!(
            "psl2({q}):{e} — e must be a proper divisor of the extension degree {k}"
        )));
    }
    let line = ProjectiveLine::new(FieldGf::new(p, k)?)?;
    let mut gens = psl2_generators(&line)?;
    gens.push(line.frobenius_perm(e));
    let group = PermGroup::new(gens)?;
    let expected = psl2_order(q) * (k / e) as u128;
    if group.order() != expected {
        return Err(Error::Constructor(format!(
            "psl2({q}):{e} — constructed order {} does not match |PSL2({q})| · {} = {expected}",
            group.order(),
            k / e
        )));
    }
    Ok(group)
}

/// Build a group from generator-file text shipped with the crate, then check
/// its order against the known value.
fn from_resource(name: &str, text: &str, expected: u128) -> Result<PermGroup> {
    let (degree, gens) = parse_generator_file(text)?;
    let group = if gens.is_empty() {
        PermGroup::trivial(degree)
    } else {
        PermGroup::new(gens)?
    };
    if group.order() != expected {
        return Err(Error::Constructor(format!(
            "{name}: generator data yields order {}, expected {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// The Mathieu group `M_n` for `n ∈ {11, 12, 22}`, built from shipped
/// generator data and checked against the known orders 7920, 95040, 443520.
pub fn mathieu(n: u32) -> Result<PermGroup> {
    match n {
        11 => from_resource("mathieu(11)", include_str!("../data/m11.gens"), 7920),
        12 => from_resource("mathieu(12)", include_str!("../data/m12.gens"), 95040),
        22 => from_resource("mathieu(22)", include_str!("../data/m22.gens"), 443520),
        other => Err(Error::Constructor(format!(
            "mathieu(n): supported n are 11, 12, 22; got {other}"
        ))),
    }
}

/// The Janko group `J1` (order 175560) on 266 points, from shipped data.
pub fn janko1() -> Result<PermGroup> {
    from_resource("janko1", include_str!("../data/j1.gens"), 175_560)
}

/// The Janko group `J2` (order 604800) on 100 points, from shipped data.
pub fn janko2() -> Result<PermGroup> {
    from_resource("janko2", include_str!("../data/j2.gens"), 604_800)
}

/// The direct product of `a` and `b` acting on the disjoint union of their
/// domains (degrees add, orders multiply).
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    if da + db > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: da + db });
    }
    let deg = da + db;
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for g in a.generators() {
        let mut images: Vec<Point> = (0..deg as Point).collect();
        images[..da].copy_from_slice(g.images());
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<Point> = (0..deg as Point).collect();
        for (i, &im) in g.images().iter().enumerate() {
            images[da + i] = da as Point + im;
        }
        gens.push(Permutation::from_images(images)?);
    }
    let group = if gens.is_empty() {
        PermGroup::trivial(deg)
    } else {
        PermGroup::new(gens)?
    };
    let expected = a.order().checked_mul(b.order()).ok_or(Error::Overflow)?;
    assert_eq!(group.order(), expected, "direct product order check");
    Ok(group)
}

/// Abstract syntax for the group-expression language accepted on the command
/// line: `Sym(n) | Alt(n) | Cyc(n) | Dih(n) | PSL2(q) | PSL2(q):e | M11 |
/// M12 | M22 | A5 | <expr> x <expr> | file:<path>`, with case-insensitive
/// names and left-associative `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Sym(u64),
    Alt(u64),
    Cyc(u64),
    Dih(u64),
    Psl2(u64),
    Psl2Ext { q: u64, e: u32 },
    M11,
    M12,
    M22,
    A5,
    Product(Box<GroupExpr>, Box<GroupExpr>),
    File(String),
}

fn syntax_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::ExprSyntax {
        pos,
        msg: msg.into(),
    }
}

fn parse_count(arg: &str, pos: usize, what: &str) -> Result<u64> {
    let n: u64 = arg
        .parse()
        .map_err(|_| syntax_err(pos, format!("{what}: expected a number, got `{arg}`")))?;
    if n == 0 {
        return Err(syntax_err(pos, format!("{what}: n must be at least 1")));
    }
    Ok(n)
}

/// Parse one whitespace-free atom of the expression grammar.
fn parse_atom(token: &str, pos: usize) -> Result<GroupExpr> {
    let lower = token.to_ascii_lowercase();
    match lower.as_str() {
        "m11" => return Ok(GroupExpr::M11),
        "m12" => return Ok(GroupExpr::M12),
        "m22" => return Ok(GroupExpr::M22),
        "a5" => return Ok(GroupExpr::A5),
        _ => {}
    }
    if let Some(path) = token.strip_prefix("file:") {
        if path.is_empty() {
            return Err(syntax_err(pos, "file: requires a path"));
        }
        return Ok(GroupExpr::File(path.to_string()));
    }
    // Name(arg) with an optional :e suffix.
    let open = lower
        .find('(')
        .ok_or_else(|| syntax_err(pos, format!("unsupported constructor `{token}`")))?;
    let close = lower
        .find(')')
        .ok_or_else(|| syntax_err(pos + open, "missing closing parenthesis"))?;
    if close < open {
        return Err(syntax_err(pos + close, "misplaced closing parenthesis"));
    }
    let name = &lower[..open];
    let arg = &lower[open + 1..close];
    let suffix = &lower[close + 1..];
    let arg_pos = pos + open + 1;

    if !suffix.is_empty() && name != "psl2" {
        return Err(syntax_err(
            pos + close + 1,
            format!(
                "unexpected trailing `{suffix}` after `{})`",
                &token[..close]
            ),
        ));
    }
    match name {
        "sym" => Ok(GroupExpr::Sym(parse_count(arg, arg_pos, "Sym(n)")?)),
        "alt" => Ok(GroupExpr::Alt(parse_count(arg, arg_pos, "Alt(n)")?)),
        "cyc" => Ok(GroupExpr::Cyc(parse_count(arg, arg_pos, "Cyc(n)")?)),
        "dih" => {
            let n = parse_count(arg, arg_pos, "Dih(n)")?;
            if n < 3 {
                return Err(syntax_err(arg_pos, "Dih(n): n must be at least 3"));
            }
            Ok(GroupExpr::Dih(n))
        }
        "psl2" => {
            let q = parse_count(arg, arg_pos, "PSL2(q)")?;
            let (_, k) = prime_power(q).ok_or_else(|| {
                syntax_err(arg_pos, format!("PSL2(q): q = {q} is not a prime power"))
            })?;
            if q < 4 {
                return Err(syntax_err(arg_pos, "PSL2(q): q must be at least 4"));
            }
            if suffix.is_empty() {
                return Ok(GroupExpr::Psl2(q));
            }
            let e_text = suffix.strip_prefix(':').ok_or_else(|| {
                syntax_err(
                    pos + close + 1,
                    format!("expected `:e` after PSL2({q}), got `{suffix}`"),
                )
            })?;
            let e: u32 = e_text.parse().map_err(|_| {
                syntax_err(
                    pos + close + 2,
                    format!("PSL2(q):e — expected a number, got `{e_text}`"),
                )
            })?;
            if e == 0 || e >= k || k % e != 0 {
                return Err(syntax_err(
                    pos + close + 2,
                    format!(
                        "PSL2({q}):{e} — e must be a proper divisor of the extension degree {k}"
                    ),
                ));
            }
            Ok(GroupExpr::Psl2Ext { q, e })
        }
        _ => Err(syntax_err(
            pos,
            format!("unsupported constructor `{token}`"),
        )),
    }
}

/// Parse a group expression. Whitespace separates atoms from the product
/// operator `x`; errors carry the byte offset of the offending token.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    // Tokenize into (byte offset, token) pairs.
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(|c: char| c.is_whitespace()).unwrap_or(tail.len());
        tokens.push((offset + start, &tail[..len]));
        offset += start + len;
        rest = &rest[start + len..];
    }
    if tokens.is_empty() {
        return Err(syntax_err(0, "empty group expression"));
    }
    let mut expr = parse_atom(tokens[0].1, tokens[0].0)?;
    let mut i = 1;
    while i < tokens.len() {
        let (pos, tok) = tokens[i];
        if !tok.eq_ignore_ascii_case("x") {
            return Err(syntax_err(pos, format!("expected `x`, got `{tok}`")));
        }
        let Some(&(rpos, rtok)) = tokens.get(i + 1) else {
            return Err(syntax_err(pos + tok.len(), "expected an operand after `x`"));
        };
        let rhs = parse_atom(rtok, rpos)?;
        expr = GroupExpr::Product(Box::new(expr), Box::new(rhs));
        i += 2;
    }
    Ok(expr)
}

/// Build the group an expression denotes.
pub fn realize(expr: &GroupExpr) -> Result<PermGroup> {
    match expr {
        GroupExpr::Sym(n) => symmetric(*n),
        GroupExpr::Alt(n) => alternating(*n),
        GroupExpr::Cyc(n) => cyclic(*n),
        GroupExpr::Dih(n) => dihedral(*n),
        GroupExpr::Psl2(q) => psl2(*q),
        GroupExpr::Psl2Ext { q, e } => psl2_frobenius_extension(*q, *e),
        GroupExpr::M11 => mathieu(11),
        GroupExpr::M12 => mathieu(12),
        GroupExpr::M22 => mathieu(22),
        GroupExpr::A5 => alternating(5),
        GroupExpr::Product(a, b) => direct_product(&realize(a)?, &realize(b)?),
        GroupExpr::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::GeneratorFile {
                msg: format!("{path}: {e}"),
            })?;
            let (degree, gens) = parse_generator_file(&text)?;
            if gens.is_empty() {
                Ok(PermGroup::trivial(degree))
            } else {
                PermGroup::new(gens)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_family_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(6).unwrap().order(), 720);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(dihedral(12).unwrap().order(), 24);
        assert!(symmetric(0).is_err());
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn psl2_order_formula_through_q_32() {
        for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32] {
            let g = psl2(q).unwrap();
            let expected = psl2_order(q);
            assert_eq!(g.order(), expected, "psl2({q})");
            assert_eq!(g.degree(), q as usize + 1);
        }
    }

    #[test]
    fn psl2_rejects_bad_q() {
        assert!(psl2(6).is_err());
        assert!(psl2(12).is_err());
        assert!(psl2(3).is_err());
        assert!(psl2(2).is_err());
        assert!(psl2(1).is_err());
    }

    #[test]
    fn psl2_4_psl2_5_alt_5_agree_in_order_and_pi() {
        let a = psl2(4).unwrap();
        let b = psl2(5).unwrap();
        let c = alternating(5).unwrap();
        assert_eq!(a.order(), 60);
        assert_eq!(b.order(), 60);
        assert_eq!(c.order(), 60);
        assert_eq!(a.pi(), vec![2, 3, 5]);
        assert_eq!(b.pi(), vec![2, 3, 5]);
        assert_eq!(c.pi(), vec![2, 3, 5]);
    }

    #[test]
    fn frobenius_extension_orders() {
        let g27 = psl2_frobenius_extension(27, 1).unwrap();
        assert_eq!(g27.order(), 29484);
        assert_eq!(g27.order() / psl2(27).unwrap().order(), 3);

        let g9 = psl2_frobenius_extension(9, 1).unwrap();
        assert_eq!(g9.order(), 720);
    }

    #[test]
    fn frobenius_sigma_is_an_order_3_outer_element_for_q_27() {
        let line = ProjectiveLine::new(FieldGf::new(3, 3).unwrap()).unwrap();
        let sigma = line.frobenius_perm(1);
        assert_eq!(sigma.order(), 3);
        let h = psl2(27).unwrap();
        let g = psl2_frobenius_extension(27, 1).unwrap();
        assert!(!h.contains(&sigma));
        assert!(g.contains(&sigma));
        for gen in h.generators() {
            assert!(g.contains(gen));
        }
    }

    #[test]
    fn frobenius_extension_rejects_bad_e() {
        assert!(psl2_frobenius_extension(27, 0).is_err());
        assert!(psl2_frobenius_extension(27, 2).is_err());
        assert!(psl2_frobenius_extension(27, 3).is_err());
        assert!(psl2_frobenius_extension(5, 1).is_err()); // k = 1: no proper e
        assert!(psl2_frobenius_extension(16, 3).is_err()); // 3 does not divide 4
        assert!(psl2_frobenius_extension(16, 2).is_ok()); // order x2
    }

    #[test]
    fn mathieu_orders_and_pi() {
        let m11 = mathieu(11).unwrap();
        assert_eq!(m11.order(), 7920);
        assert_eq!(m11.pi(), vec![2, 3, 5, 11]);
        let m12 = mathieu(12).unwrap();
        assert_eq!(m12.order(), 95040);
        assert_eq!(m12.pi(), vec![2, 3, 5, 11]);
        let m22 = mathieu(22).unwrap();
        assert_eq!(m22.order(), 443520);
        assert_eq!(m22.pi(), vec![2, 3, 5, 7, 11]);
        assert!(mathieu(23).is_err());
    }

    #[test]
    fn janko_orders() {
        let j2 = janko2().unwrap();
        assert_eq!(j2.order(), 604_800);
        assert_eq!(j2.degree(), 100);
        let j1 = janko1().unwrap();
        assert_eq!(j1.order(), 175_560);
        assert_eq!(j1.pi(), vec![2, 3, 5, 7, 11, 19]);
    }

    #[test]
    fn direct_products() {
        let c2c3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert_eq!(c2c3.order(), 6);
        assert_eq!(c2c3.degree(), 5);
        let s3c5 = direct_product(&symmetric(3).unwrap(), &cyclic(5).unwrap()).unwrap();
        assert_eq!(s3c5.order(), 30);
        let a5c7 = direct_product(&alternating(5).unwrap(), &cyclic(7).unwrap()).unwrap();
        assert_eq!(a5c7.order(), 420);
        assert_eq!(a5c7.pi(), vec![2, 3, 5, 7]);
    }

    #[test]
    fn expression_grammar_round_trips() {
        assert_eq!(
            realize(&parse_group_expr("PSL2(27):1").unwrap())
                .unwrap()
                .order(),
            29484
        );
        assert_eq!(
            realize(&parse_group_expr("Sym(4) x Cyc(3)").unwrap())
                .unwrap()
                .order(),
            72
        );
        assert_eq!(
            realize(&parse_group_expr("M11").unwrap()).unwrap().order(),
            7920
        );
        assert_eq!(
            realize(&parse_group_expr("a5").unwrap()).unwrap().order(),
            60
        );
        // Case-insensitive names and separator.
        assert_eq!(
            realize(&parse_group_expr("sym(3) X cyc(5)").unwrap())
                .unwrap()
                .order(),
            30
        );
        // Left-associative products.
        let e = parse_group_expr("Cyc(2) x Cyc(3) x Cyc(5)").unwrap();
        match &e {
            GroupExpr::Product(left, right) => {
                assert!(matches!(**right, GroupExpr::Cyc(5)));
                assert!(matches!(**left, GroupExpr::Product(_, _)));
            }
            other => panic!("expected product, got {other:?}"),
        }
        assert_eq!(realize(&e).unwrap().order(), 30);
    }

    #[test]
    fn expression_errors_carry_positions() {
        let err = parse_group_expr("").unwrap_err();
        assert!(matches!(err, Error::ExprSyntax { .. }));
        match parse_group_expr("Sym(4) Cyc(3)").unwrap_err() {
            Error::ExprSyntax { pos, .. } => assert_eq!(pos, 7),
            other => panic!("unexpected error {other:?}"),
        }
        match parse_group_expr("Foo(3)").unwrap_err() {
            Error::ExprSyntax { pos, .. } => assert_eq!(pos, 0),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_group_expr("Sym(0)").is_err());
        assert!(parse_group_expr("Sym(").is_err());
        assert!(parse_group_expr("PSL2(6)").is_err());
        assert!(parse_group_expr("PSL2(27):2").is_err());
        assert!(parse_group_expr("Sym(3) x").is_err());
        assert!(parse_group_expr("Dih(2)").is_err());
    }

    #[test]
    fn file_expressions_load_generator_files() {
        let dir = std::env::temp_dir().join("sgraph-constructor-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("klein.gens");
        std::fs::write(&path, "degree 4\n(1,2)(3,4)\n(1,3)(2,4)\n").unwrap();
        let expr = parse_group_expr(&format!("file:{}", path.display())).unwrap();
        let g = realize(&expr).unwrap();
        assert_eq!(g.order(), 4);
        assert!(realize(&GroupExpr::File("/nonexistent/x.gens".into())).is_err());
    }
}
