use faer::complex_native::c64;
use faer::Mat;

fn main() {
    // complex symmetric 4x4: A - i*B/2 with A,B real symmetric
    let n = 4;
    let mut m = Mat::<c64>::zeros(n, n);
    let a = [[1.0, 0.3, 0.1, 0.0], [0.3, -0.5, 0.2, 0.1], [0.1, 0.2, 0.7, 0.4], [0.0, 0.1, 0.4, 0.2]];
    let b = [[1.0, 0.8, 0.5, 0.2], [0.8, 1.0, 0.8, 0.5], [0.5, 0.8, 1.0, 0.8], [0.2, 0.5, 0.8, 1.0]];
    for i in 0..n { for j in 0..n { m[(i, j)] = c64::new(a[i][j], -0.5 * b[i][j]); } }
    let evd = m.eigendecomposition::<c64>();
    let s = evd.s();
    let u = evd.u();
    // residual || M u_k - lambda_k u_k ||
    for k in 0..n {
        let lam = s.column_vector()[k];
        let mut res: f64 = 0.0;
        for i in 0..n {
            let mut acc = c64::new(0.0, 0.0);
            for j in 0..n { acc += m[(i, j)] * u[(j, k)]; }
            acc -= lam * u[(i, k)];
            res += acc.norm_sqr();
        }
        println!("lambda_{} = {:+.6} {:+.6}i   resid {:.2e}", k, lam.re, lam.im, res.sqrt());
    }
}
