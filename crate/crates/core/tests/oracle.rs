use jackleaf::algebra::{Rat, RatFun};
use jackleaf::binomials::binomial;
use jackleaf::oracle::{binomial_oracle, JackOracle};
use jackleaf::partitions::{partitions_of, partitions_up_to, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Semistandard tableaux of shape `lam` and content `mu`, by filling boxes in
/// reading order.
fn kostka(lam: &Partition, mu: &Partition) -> usize {
    fn go(shape: &[usize], grid: &mut Vec<Vec<usize>>, left: &mut [usize], row: usize, col: usize) -> usize {
        if row == shape.len() {
            return usize::from(left.iter().all(|&c| c == 0));
        }
        if col == shape[row] {
            return go(shape, grid, left, row + 1, 0);
        }
        let lo = if col > 0 { grid[row][col - 1] } else { 0 };
        let above = if row > 0 { grid[row - 1][col] + 1 } else { 0 };
        let mut total = 0;
        for v in lo.max(above)..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            grid[row][col] = v;
            total += go(shape, grid, left, row, col + 1);
            left[v] += 1;
        }
        total
    }
    let shape = lam.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&n| vec![0; n]).collect();
    let mut left = mu.parts().to_vec();
    go(&shape, &mut grid, &mut left, 0, 0)
}

#[test]
fn kostka_sanity() {
    assert_eq!(kostka(&p("2,1"), &p("1,1,1")), 2);
    assert_eq!(kostka(&p("3,2"), &p("2,2,1")), 2);
    assert_eq!(kostka(&p("2,2"), &p("3,1")), 0);
}

#[test]
fn schur_specialization() {
    let mut oracle = JackOracle::new();
    let one = Rat::one();
    for n in 1..=5 {
        for lam in partitions_of(n) {
            let jack = oracle.jack_polynomial(&lam, n).unwrap();
            for mu in partitions_of(n) {
                let c = jack.coeff(&mu).eval(&one).unwrap();
                assert_eq!(c, Rat::from(kostka(&lam, &mu)), "{lam} at {mu}");
            }
        }
    }
}

#[test]
fn eigenfunctions_of_laplace_beltrami() {
    let mut oracle = JackOracle::new();
    for lam in partitions_up_to(5).into_iter().filter(|l| !l.is_empty()) {
        let jack = oracle.jack_polynomial(&lam, 5).unwrap();
        assert!(jack.coeff(&lam).is_one());
        assert!(jack.support().all(|nu| lam.dominates(nu)), "{lam}");
        let f = jack.to_explicit().unwrap();
        let df = f.apply_laplace_beltrami().unwrap();
        let mut lead: Vec<u32> = lam.parts().iter().map(|&x| x as u32).collect();
        lead.resize(5, 0);
        let e = df.coeff(&lead);
        assert_eq!(df, f.map(|c| c * &e), "{lam}");
        assert_eq!(e, oracle.eigenvalue(&lam, 5).unwrap());
    }
}

#[test]
fn not_contained_is_zero() {
    for (l, m) in [("2", "1,1"), ("3,1", "2,2"), ("1,1,1", "2")] {
        assert!(binomial(&p(l), &p(m)).is_zero());
        assert!(binomial_oracle(&p(l), &p(m), 3).unwrap().is_zero());
    }
}

#[test]
fn normalization() {
    for n in 0..=4 {
        for lam in partitions_of(n) {
            assert!(binomial(&lam, &lam).is_one());
            assert_eq!(binomial(&lam, &Partition::empty()), RatFun::one());
        }
    }
    assert_eq!(binomial(&p("2"), &p("1")), RatFun::from_int(2));
}
