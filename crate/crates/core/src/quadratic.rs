use num_complex::Complex64;

/// Both roots of `a x² + b x + c = 0`.
///
/// The larger-magnitude root comes from `q = -(b ± √(b² - 4ac)) / 2` with the
/// sign that avoids cancellation, the other from the product `c / q`. With
/// `a = 0` the first root is infinite.
pub(crate) fn roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    let plus = b + disc;
    let minus = b - disc;
    let q = if plus.norm() >= minus.norm() {
        -0.5 * plus
    } else {
        -0.5 * minus
    };
    if q == Complex64::new(0.0, 0.0) {
        return [q, q];
    }
    let big = if a == Complex64::new(0.0, 0.0) {
        Complex64::new(f64::INFINITY, 0.0)
    } else {
        q / a
    };
    [big, c / q]
}
