use num_traits::{Signed, Zero};

use super::manifest::EXACT_GRID_POINTS;
use super::{check, VerifyConfig};
use crate::exact::{
    bernstein_apply, central_closed_forms, central_derivative, central_form, cnk_from_central_form, cnk_solve,
    derivative_at_one, derivative_sum_at_one, exact_margin, f_identity_holds, factorial, int, ode_residual_poly,
    rat, recentered_s_poly, s_poly, s_second_derivative_grid, saw_nodes, shift_expansion_nonneg,
    tsallis_residual_poly, BracketConvention, RationalPoly,
};
use crate::record::VerificationRecord;

const SUITE: &str = "exact";

fn equal(rec: &mut VerificationRecord, ok: bool, location: impl FnOnce() -> String) {
    rec.observe(if ok { 0.0 } else { -1.0 }, location);
}

pub fn exact_suite(cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    let wide = cfg.exact_n_wide;
    let narrow = cfg.exact_n;
    out.push(check(SUITE, format!("S symmetric under x -> 1-x, n<={wide}"), |rec| {
        let reflect = RationalPoly::from_integers([1, -1]);
        for n in 1..=wide {
            let s = s_poly(n)?;
            equal(rec, s.compose(&reflect) == s, || format!("n={n}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("central expansion equals S, n<={wide}"), |rec| {
        for n in 1..=wide {
            let cf = central_form(n)?;
            equal(rec, recentered_s_poly(n)? == cf.as_poly_in_y(), || format!("n={n}"));
            for (k, a) in cf.a.iter().enumerate() {
                rec.observe(exact_margin(a), || format!("n={n} a_{k}"));
            }
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("odd derivatives vanish at 1/2, n<={wide}"), |rec| {
        for n in 1..=wide {
            let shifted = recentered_s_poly(n)?;
            for (i, c) in shifted.coeffs().iter().enumerate().filter(|(i, _)| i % 2 == 1) {
                equal(rec, c.is_zero(), || format!("n={n} order={i}"));
            }
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("even derivatives at 1/2 positive and closed form, n<={wide}"), |rec| {
        for n in 1..=wide {
            let cf = central_form(n)?;
            for j in 0..=n {
                let d = central_derivative(n, j)?;
                let via_form = int(factorial(2 * u64::from(j))) * &cf.a[j as usize];
                equal(rec, d == via_form, || format!("n={n} j={j} mismatch"));
                rec.observe(exact_margin(&d), || format!("n={n} j={j}"));
            }
            let (s0, s2, s4) = central_closed_forms(n)?;
            let y = rat(1, 2);
            let s = s_poly(n)?;
            equal(rec, s.eval(&y) == s0, || format!("n={n} S(1/2)"));
            equal(rec, s.nth_derivative(2).eval(&y) == s2, || format!("n={n} S''(1/2)"));
            if let Some(s4) = s4 {
                equal(rec, s.nth_derivative(4).eval(&y) == s4, || format!("n={n} S''''(1/2)"));
            }
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("f_n from S' at t/(t+1), n<={wide}"), |rec| {
        for n in 1..=wide {
            equal(rec, f_identity_holds(n)?, || format!("n={n}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("f_n(1+u) has nonnegative coefficients, n<={wide}"), |rec| {
        for n in 1..=wide {
            let r = shift_expansion_nonneg(n)?;
            rec.observe(r.worst_margin, || r.location.clone());
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("derivatives of f_n at 1 match the closed sum, n<={narrow}"), |rec| {
        for n in 1..=narrow {
            for i in 0..2 * n {
                let (direct, closed) = derivative_at_one(n, i)?;
                equal(rec, direct == closed, || format!("n={n} i={i} mismatch"));
                rec.observe(exact_margin(&closed), || format!("n={n} i={i}"));
            }
        }
        Ok(())
    }));
    // Evidence on the bracket reading: the ceiling version is wrong for
    // every odd i, so this record only counts disagreements.
    let mut ceil = check(SUITE, format!("ceiling reading of the lower limit, n<={narrow}"), |rec| {
        let mut differ = 0u32;
        for n in 1..=narrow {
            for i in 0..2 * n {
                let floor = derivative_sum_at_one(n, i, BracketConvention::Floor)?;
                let ceil = derivative_sum_at_one(n, i, BracketConvention::Ceil)?;
                if floor != ceil {
                    differ += 1;
                }
            }
        }
        rec.observe(-f64::from(differ), || format!("{differ} (n, i) pairs differ from the floor reading"));
        Ok(())
    });
    ceil = ceil.report_only();
    out.push(ceil);
    out.push(check(SUITE, format!("c_nk solve: consistent and positive, n<={narrow}"), |rec| {
        for n in 1..=narrow {
            let d = cnk_solve(n)?;
            for (k, c) in d.c.iter().enumerate() {
                rec.observe(exact_margin(c), || format!("n={n} k={}", k + 1));
            }
            equal(rec, d.c == cnk_from_central_form(n)?, || format!("n={n} differs from (k/n) a_k 2^(1-2k)"));
            equal(rec, d.c.iter().all(Signed::is_positive), || format!("n={n} nonpositive entry"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("Bernstein image of the saw function is S, n<={wide}"), |rec| {
        for n in 1..=wide {
            equal(rec, bernstein_apply(2 * n, &saw_nodes(n))? == s_poly(n)?, || format!("n={n}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("S'' >= 0 at j/{EXACT_GRID_POINTS}, n<={wide}"), |rec| {
        for n in 1..=wide {
            let r = s_second_derivative_grid(n, EXACT_GRID_POINTS)?;
            rec.observe(r.worst_margin, || r.location.clone());
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("S and 1-S solve their equations exactly, n<={wide}"), |rec| {
        for n in 1..=wide {
            equal(rec, ode_residual_poly(n)?.is_zero(), || format!("n={n} S"));
            equal(rec, tsallis_residual_poly(n)?.is_zero(), || format!("n={n} T"));
        }
        Ok(())
    }));
    out
}
