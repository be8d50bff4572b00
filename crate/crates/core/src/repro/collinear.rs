//! Configurations with a long collinear subset.

use super::{
    config, int, line, pair, product, series_text, strings, var, Checks, ClaimReport, ReproOptions,
    SAMPLE_SEED,
};
use crate::error::Result;
use crate::geometry::{classify_config, ideal_of_points, jacobian, sample_config};
use crate::hilbert::{hilbert_series, intersection_series, HilbertSeries};
use crate::ideals::Ideal;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational};
use crate::vava::{relation_type, vv_piece, vv_torsion_free, vv_witness};

fn binary() -> PolyRing {
    PolyRing::new(&["x", "y"]).expect("distinct names")
}

/// `Π (x - a·y)` in `ring` (whose first two variables are `x, y`).
fn binary_product(ring: &PolyRing, a: &[i64]) -> Polynomial {
    let (x, y) = (var(ring, "x"), var(ring, "y"));
    product(a.iter().map(|&k| &x - &(&int(ring, k) * &y)), ring)
}

fn to_plane(p: &Polynomial) -> Polynomial {
    p.embed(&PolyRing::plane(), &[0, 1])
}

/// A plane form free of `z`, read in `k[x, y]`.
fn to_binary(p: &Polynomial) -> Polynomial {
    debug_assert_eq!(p.degree_in(2), 0);
    let terms = p
        .terms()
        .iter()
        .map(|(m, k)| (Monomial::from_exponents(&m.exponents()[..2]), k.clone()))
        .collect();
    Polynomial::from_terms(&binary(), terms)
}

pub(super) fn r15b(_: &ReproOptions) -> Result<ClaimReport> {
    let mut c = Checks::new("R15b");
    let r = PolyRing::plane();
    for s in [4usize, 5] {
        // points [a:1:0] with a = 0, 1, -1, 2, ...; f = Π (x - a y)
        let a: Vec<i64> = [0, 1, -1, 2, -2][..s].to_vec();
        let pts: Vec<[i64; 3]> = a.iter().map(|&k| [k, 1, 0]).collect();
        let cfg = config(&pts)?;
        let (j, i) = pair(&cfg)?;
        let f = binary_product(&r, &a);
        let expected = Ideal::new(&r, vec![var(&r, "z"), f.clone()])?;
        c.check(format!("s={s}: I(X) = (z, f)"), j.equals(&expected)?);
        let rt = relation_type(&j, &i, s as u32)?;
        c.check(
            format!("s={s}: relation type = s"),
            rt.relation_type == s as u32,
        );
        let report = vv_torsion_free(&j, &i, s)?;
        let first = report.first_failure().map(|p| p.t);
        c.check(
            format!("s={s}: not torsion-free, first failure at t = 2"),
            first == Some(2),
        );
        let w = &var(&r, "y").pow(2 * s as u32 - 4) * &f;
        c.witness(&format!("s={s}: y^{} f", 2 * s - 4), &j, &i, 2, &w)?;
        if s == 4 {
            c.note("f", f.to_string());
            c.note("jacobian_ideal", strings(i.generators()));
            c.note(
                "computed_witness",
                report
                    .first_failure()
                    .and_then(|p| p.witness.as_ref())
                    .map(|w| w.to_string()),
            );
            c.note("graded_dims_t2", &report.per_t[0].graded_dims);
        }
    }
    Ok(c.finish())
}

/// Numerators of `HS(S/(f) ∩ a^2)` and `HS(S/(f)·a)` as printed, for
/// `s ≥ 6`: ones up to `t^{2s-3}`, then `-3t^{2s-2}`, then `-1` up to
/// `t^{3s-8}` and a final `-2t^{3s-7}` (respectively `-1` up to `t^{3s-6}`).
pub(crate) fn printed_collinear_numerators(s: usize) -> (Vec<i64>, Vec<i64>) {
    let mut head = vec![1i64; 2 * s - 2];
    head.push(-3);
    let mut a = head.clone();
    a.extend(std::iter::repeat(-1).take(s - 6));
    a.push(-2);
    let mut b = head;
    b.extend(std::iter::repeat(-1).take(s - 4));
    (a, b)
}

pub(super) fn t22(opts: &ReproOptions) -> Result<ClaimReport> {
    let mut c = Checks::new("T22-claim");
    let sizes: &[usize] = if opts.slow { &[5, 6, 7] } else { &[5, 6] };
    let sr = binary();
    for &s in sizes {
        let a: Vec<i64> = [0, 1, -1, 2, -2, 3][..s - 1].to_vec();
        let mut pts: Vec<[i64; 3]> = a.iter().map(|&k| [k, 1, 0]).collect();
        pts.push([0, 0, 1]);
        let cfg = config(&pts)?;
        let (j, i) = pair(&cfg)?;
        let r = PolyRing::plane();
        let f = binary_product(&sr, &a);
        let z = var(&r, "z");
        let printed_j = Ideal::new(
            &r,
            vec![
                &z * &line(pts[0], pts[s - 1]),
                &z * &line(pts[1], pts[s - 1]),
                to_plane(&f),
            ],
        )?;
        c.check(
            format!("s={s}: I(X) = (z l_1s, z l_2s, f)"),
            j.equals(&printed_j)?,
        );
        let (fx, fy) = (f.differentiate_index(0), f.differentiate_index(1));
        let (x, y) = (var(&sr, "x"), var(&sr, "y"));
        let a_gens = vec![&x * &fx, &y * &fx, &x * &fy, &y * &fy];
        let aa = Ideal::new(&sr, a_gens.clone())?;
        let a_in_r = Ideal::new(&r, a_gens.iter().map(to_plane).collect())?;
        c.check(format!("s={s}: a ⊆ I"), i.contains_ideal(&a_in_r)?);
        let a2 = aa.power(2)?;
        let fi = Ideal::new(&sr, vec![f.clone()])?;
        let cap = fi.intersect(&a2)?;
        let prod = fi.product(&aa)?;
        c.check(format!("s={s}: (f) ∩ a^2 ≠ (f)·a"), !cap.equals(&prod)?);
        if s >= 6 {
            let (hs_cap, hs_prod) = (hilbert_series(&cap)?, hilbert_series(&prod)?);
            c.check(
                format!("s={s}: HS of (f) ∩ a^2 agrees with HS(f) + HS(a^2) - HS((f) + a^2)"),
                intersection_series(&fi, &a2)? == hs_cap,
            );
            let (na, nb) = printed_collinear_numerators(s);
            c.check(
                format!("s={s}: HS(S/(f) ∩ a^2) as printed"),
                hs_cap == HilbertSeries::new(na, 1),
            );
            c.check(
                format!("s={s}: HS(S/(f)·a) as printed"),
                hs_prod == HilbertSeries::new(nb, 1),
            );
            c.check(
                format!("s={s}: a^2 minimally generated by 9 forms of degree 2(s-1)"),
                a2.minimal_generators()?
                    .iter()
                    .map(|g| g.degree())
                    .eq(std::iter::repeat(Some(2 * s as u32 - 2)).take(9)),
            );
            let fa2 = fi.sum(&a2)?;
            c.check(
                format!("s={s}: (f, a^2) minimally generated by 6 forms"),
                fa2.minimal_generators()?.len() == 6,
            );
            c.note(
                &format!("series_s{s}"),
                serde_json::json!({
                    "cap": series_text(&hs_cap),
                    "product": series_text(&hs_prod),
                }),
            );
        }
        let dims = vv_piece(&j, &i, 2)?;
        c.check(format!("s={s}: J ∩ I^2 ≠ J·I"), !dims.is_empty());
        c.note(&format!("graded_dims_t2_s{s}"), &dims);
    }
    Ok(c.finish())
}

/// `(1 + 2t + k t^2 + t^3 + … + t^m) / (1 - t)`.
fn staircase_series(k: i64, m: usize) -> HilbertSeries {
    let mut n = vec![1, 2, k];
    n.extend(std::iter::repeat(1).take(m.saturating_sub(2)));
    HilbertSeries::new(n, 1)
}

fn evaluate_int(p: &Polynomial, pt: [i64; 3]) -> Rational {
    let v: Vec<Rational> = pt.iter().map(|&c| Rational::from_int(c)).collect();
    p.evaluate(&v)
}

pub(super) fn t23(_: &ReproOptions) -> Result<ClaimReport> {
    const S: usize = 8;
    let mut c = Checks::new("T23");
    let r = PolyRing::plane();
    let (x, y, z) = (var(&r, "x"), var(&r, "y"), var(&r, "z"));
    // p_i = [1:a_i:0] (a_i ≠ 0, 1), p_{s-1} = [0:0:1], p_s = [1:1:1]
    let a = [-1i64, 2, -2, 3, -3, 4];
    let mut pts: Vec<[i64; 3]> = a.iter().map(|&k| [1, k, 0]).collect();
    pts.push([0, 0, 1]);
    pts.push([1, 1, 1]);
    let cfg = config(&pts)?;
    let class = classify_config(&cfg)?;
    c.check(
        "configuration is (8,2)-fold, off variant",
        class.descriptor == "(8,2)-fold" && class.connecting_line_meets == Some(false),
    );
    let (j, jd) = {
        let j = ideal_of_points(&cfg);
        let jd = jacobian(&j, 2)?;
        (j, jd)
    };
    let i = jd.ideal.clone();
    let (pm, ps) = (pts[S - 2], pts[S - 1]);
    let l = line(pm, ps);
    let hb = Ideal::new(
        &r,
        vec![
            &z * &l,
            &(&z * &line(pts[0], pm)) * &line(pts[S - 3], ps),
            &line(pts[S - 3], ps) * &product((0..S - 3).map(|k| line(pts[k], pm)), &r),
        ],
    )?;
    let expected = staircase_series(2, S - 3);
    c.check("Hilbert-Burch ideal ⊆ I(X)", j.contains_ideal(&hb)?);
    c.check(
        "HS(R/Hilbert-Burch ideal) = (1+2t+2t^2+t^3+…+t^(s-3))/(1-t)",
        hilbert_series(&hb)? == expected,
    );
    c.check(
        "HS(R/I(X)) = (1+2t+2t^2+t^3+…+t^(s-3))/(1-t)",
        hilbert_series(&j)? == expected,
    );
    c.check("Hilbert-Burch ideal = I(X)", hb.equals(&j)?);

    // G = c·Π (y - a_i x), scaled so that f = G + y z^{s-3} vanishes at [1:1:1]
    let raw = product(a.iter().map(|&k| &y - &(&int(&r, k) * &x)), &r);
    let g = raw.scale(&-evaluate_int(&raw, [1, 1, 1]).inv());
    let q = &(&x * &z) - &(&y * &z);
    let cubic = &(&z * &y.pow(2)) - &(&y * &z.pow(2));
    let f = &g + &(&y * &z.pow(S as u32 - 3));
    c.check(
        "I(X) = (xz - yz, zy^2 - yz^2, G + yz^(s-3))",
        Ideal::new(&r, vec![q.clone(), cubic, f])?.equals(&j)?,
    );
    let (gx, gy) = (g.differentiate_index(0), g.differentiate_index(1));
    let ymx = &y - &x;
    let printed_i = Ideal::new(
        &r,
        vec![
            q,
            &y.pow(2) * &z,
            &y * &z.pow(2),
            z.pow(3),
            g.clone(),
            &ymx * &gx,
            &ymx * &gy,
            &y.pow(2) * &gx,
        ],
    )?;
    c.check(
        "Jacobian ideal = (xz-yz, y^2z, yz^2, z^3, G, (y-x)f_x, (y-x)H, y^2 f_x)",
        printed_i.equals(&i)?,
    );
    let b_gens = [g.clone(), &ymx * &gx, &ymx * &gy, &y.pow(2) * &gx];
    let b = Ideal::new(&binary(), b_gens.iter().map(to_binary).collect())?;
    let ypow = b.min_pure_power("y")?;
    c.check(
        "least power of y in b is 2s-7",
        ypow == Some(2 * S as u32 - 7),
    );
    c.note("least_y_power_in_b", ypow);

    let yg = &y.pow(2 * S as u32 - 8) * &g;
    let tail = &y * &z.pow(2 * S as u32 - 3);
    let printed_e = &yg - &tail;
    let printed_in_j = j.contains(&printed_e)?;
    c.note("printed_E_in_J", printed_in_j);
    c.note(
        "sign_note",
        "with f = G + yz^(s-3), G(1,1) = -1, so y^(2s-8)G - yz^(2s-3) is nonzero at [1:1:1]; \
         the witness is checked as y^(2s-8)G + yz^(2s-3)",
    );
    let e = &yg + &tail;
    c.witness("E = y^(2s-8)G + yz^(2s-3)", &j, &i, 2, &e)?;
    let dims = vv_piece(&j, &i, 2)?;
    c.check("J ∩ I^2 ≠ J·I (off variant)", !dims.is_empty());
    c.note("graded_dims_t2_off", &dims);
    c.note("G", g.to_string());
    c.note("E", e.to_string());

    let cin = sample_config("(8,2)-fold-in", SAMPLE_SEED)?;
    let (jin, iin) = pair(&cin)?;
    let din = vv_piece(&jin, &iin, 2)?;
    c.check("J ∩ I^2 ≠ J·I (in variant, sampled)", !din.is_empty());
    c.note("graded_dims_t2_in", &din);
    c.note("in_points", cin.to_json());
    Ok(c.finish())
}

/// Without `--slow` only the `t = 2` piece is computed; a nonzero piece
/// already decides the verdict.
pub(super) fn t23_s7(opts: &ReproOptions) -> Result<ClaimReport> {
    let mut c = Checks::new("T23-s7");
    for variant in ["(7,2)-fold-off", "(7,2)-fold-in"] {
        let cfg = sample_config(variant, SAMPLE_SEED)?;
        let (j, i) = pair(&cfg)?;
        let piece = vv_piece(&j, &i, 2)?;
        let mut entry = serde_json::json!({
            "points": cfg.to_json(),
            "t2_graded_dims": piece,
        });
        if !piece.is_empty() {
            entry["torsion_free"] = false.into();
        } else if opts.slow {
            let report = vv_torsion_free(&j, &i, 7)?;
            entry["torsion_free"] = report.torsion_free.into();
            entry["relation_type"] = serde_json::json!(report.relation_type);
            entry["first_failure"] = serde_json::json!(report.first_failure().map(|p| p.t));
        } else {
            entry["torsion_free"] = "undecided without --slow".into();
        }
        c.note(variant, entry);
    }
    Ok(c.finish_indeterminate())
}

/// Pieces of the `(s-3)`-fold configuration with `p_i = [a_i:1:0]` and
/// `[1:0:1], [0:1:1], [0:0:1]` off the line.
struct ThreeOff {
    pts: Vec<[i64; 3]>,
    a_ideal: Ideal,
    g: Polynomial,
}

fn three_off(a: &[i64]) -> Result<ThreeOff> {
    let r = PolyRing::plane();
    let mut pts: Vec<[i64; 3]> = a.iter().map(|&k| [k, 1, 0]).collect();
    pts.extend([[1, 0, 1], [0, 1, 1], [0, 0, 1]]);
    let s = pts.len();
    let (p1, p2, p3) = (pts[s - 3], pts[s - 2], pts[s - 1]);
    let (l13, l23, l12) = (line(p1, p3), line(p2, p3), line(p1, p2));
    let z = var(&r, "z");
    let a_ideal = Ideal::new(
        &r,
        vec![
            &z * &(&l13 * &l23),
            &z * &(&l13 * &l12),
            &z * &(&l23 * &l12),
        ],
    )?;
    let g = &(&line(pts[0], p1) * &line(pts[1], p2))
        * &product((2..s - 3).map(|k| line(pts[k], p3)), &r);
    Ok(ThreeOff { pts, a_ideal, g })
}

pub(super) fn t24(_: &ReproOptions) -> Result<ClaimReport> {
    const S: usize = 9;
    let mut c = Checks::new("T24");
    let r = PolyRing::plane();
    let (x, y, z) = (var(&r, "x"), var(&r, "y"), var(&r, "z"));

    let small = three_off(&[2, -2, 3])?;
    c.check(
        "s=6: (a : G) = (z)",
        small
            .a_ideal
            .quotient(&Ideal::new(&r, vec![small.g.clone()])?)?
            .equals(&Ideal::new(&r, vec![z.clone()])?)?,
    );

    let a = [2i64, -2, 3, -3, 4, -4];
    let t = three_off(&a)?;
    let cfg = config(&t.pts)?;
    let class = classify_config(&cfg)?;
    c.check(
        "configuration is (9,3)-fold with the other three in general position",
        class.profile == [S - 3],
    );
    let (j, i) = pair(&cfg)?;
    let printed_a = Ideal::parse(&r, &["z*x*y", "x^2*z - x*z^2", "y^2*z - y*z^2"])?;
    c.check(
        "a = (zxy, x^2z - xz^2, y^2z - yz^2)",
        t.a_ideal.equals(&printed_a)?,
    );
    let gi = Ideal::new(&r, vec![t.g.clone()])?;
    c.check(
        "(a : G) = (z)",
        t.a_ideal
            .quotient(&gi)?
            .equals(&Ideal::new(&r, vec![z.clone()])?)?,
    );
    c.check(
        "HS(R/a) = (1+t+t^2-2t^3)/(1-t)^2",
        hilbert_series(&t.a_ideal)? == HilbertSeries::new(vec![1, 1, 1, -2], 2),
    );
    let jj = t.a_ideal.sum(&gi)?;
    c.check("(a, G) = I(X)", jj.equals(&j)?);
    let expected = staircase_series(3, S - 4);
    c.check(
        "HS(R/I(X)) = (1+2t+3t^2+t^3+…+t^(s-4))/(1-t)",
        hilbert_series(&j)? == expected,
    );

    let f = binary_product(&r, &a);
    let e: i64 = a.iter().product();
    let zz = z.pow(S as u32 - 4);
    let printed_gen = &f + &(&zz * &(&(&int(&r, e) * &y) - &x));
    let sign = if S % 2 == 0 { 1 } else { -1 };
    let gen = &f + &(&zz * &(&(&int(&r, sign * e) * &y) - &x));
    c.note("printed_generator_in_I(X)", j.contains(&printed_gen)?);
    c.check(
        "I(X) = (a, f + z^(s-4)((-1)^s e y - x))",
        t.a_ideal.sum(&Ideal::new(&r, vec![gen])?)?.equals(&j)?,
    );
    let (fx, fy) = (f.differentiate_index(0), f.differentiate_index(1));
    let (x2, y2) = (x.pow(2), y.pow(2));
    let b_gens = vec![f.clone(), &x2 * &fx, &x2 * &fy, &y2 * &fx, &y2 * &fy];
    let mut i_gens: Vec<Polynomial> = t.a_ideal.generators().to_vec();
    i_gens.extend([&x * &z.pow(3), &y * &z.pow(3), z.pow(4)]);
    i_gens.extend(b_gens.iter().cloned());
    c.check(
        "Jacobian ideal = (a, xz^3, yz^3, z^4, f, x^2f_x, x^2f_y, y^2f_x, y^2f_y)",
        Ideal::new(&r, i_gens)?.equals(&i)?,
    );
    let b = Ideal::new(&binary(), b_gens.iter().map(to_binary).collect())?;
    let ypow = b.min_pure_power("y")?;
    c.check(
        "least power of y in b is 2s-9",
        ypow == Some(2 * S as u32 - 9),
    );
    c.note("least_y_power_in_b", ypow);

    let yf = &y.pow(2 * S as u32 - 10) * &f;
    let tail = &y * &z.pow(3 * S as u32 - 14);
    c.note("printed_witness_in_J", j.contains(&(&yf - &tail))?);
    // f(0, 1) = (-1)^(s-3) e is the value the tail must cancel at [0:1:1]
    let f01 = evaluate_int(&f, [0, 1, 1]);
    let w = &yf - &tail.scale(&f01);
    c.note(
        "sign_note",
        "at [0:1:1], f = (-1)^(s-3) e, so the generator needs (-1)^s e y and the witness \
         y^(2s-10)f - (-1)^(s-3) e yz^(3s-14); the printed forms hold when s is even and e = 1",
    );
    c.witness("y^(2s-10)f - f(0,1) yz^(3s-14)", &j, &i, 2, &w)?;
    c.note("witness", w.to_string());
    c.note("e", e);
    let dims = vv_piece(&j, &i, 2)?;
    c.check("J ∩ I^2 ≠ J·I", !dims.is_empty());
    c.note("graded_dims_t2", &dims);
    c.note(
        "computed_witness",
        vv_witness(&j, &i, 2)?.map(|w| w.to_string()),
    );
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_numerators_have_multiplicity_s_minus_one() {
        for s in 6..12 {
            let (a, b) = printed_collinear_numerators(s);
            assert_eq!(a.iter().sum::<i64>(), s as i64 - 1);
            assert_eq!(b.iter().sum::<i64>(), s as i64 - 1);
            assert_eq!(a.len(), 3 * s - 6);
            assert_eq!(b.len(), 3 * s - 5);
        }
        let (a, b) = printed_collinear_numerators(6);
        assert_eq!(&a[9..], [1, -3, -2]);
        assert_eq!(&b[9..], [1, -3, -1, -1]);
    }

    #[test]
    fn staircase() {
        assert_eq!(staircase_series(2, 5).numerator, [1, 2, 2, 1, 1, 1]);
        assert_eq!(staircase_series(3, 5).multiplicity(), 9);
    }
}
