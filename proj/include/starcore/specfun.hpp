#ifndef STARCORE_SPECFUN_HPP
#define STARCORE_SPECFUN_HPP

#include <utility>
#include <vector>

// Combinatorial and hypergeometric building blocks: Pochhammer symbols,
// log-gamma, terminating Gauss 2F1 series, and the terminating two-variable
// Kampe de Feriet double series. Everything here is a pure function of its
// arguments; domain violations throw std::domain_error.

namespace starcore::specfun {

// Compensated (Kahan) accumulator. The alternating (-gamma)_m sums in the
// structure/energy modules lose ~3 digits at gamma=10 with naive summation;
// compensation keeps them below 1e-12 relative.
struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double y = value - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

/// Rising factorial (x)_n = x(x+1)...(x+n-1); 1 for n = 0.
/// Overflow to infinity is permitted; use ln_pochhammer for large n.
double pochhammer(double x, int n);

/// log (x)_n for x > 0, computed as ln Gamma(x+n) - ln Gamma(x).
double ln_pochhammer(double x, int n);

/// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative).
double ln_gamma(double x);

/// ln Gamma(a) - ln Gamma(b) for a, b > 0.
double ln_gamma_ratio(double a, double b);

/// (x+1)_n / n! = prod_{j=1..n} (x+j)/j. The mass-normalization product
/// that appears with x = 3/delta; factors are interleaved to delay overflow.
double poch_over_factorial(double x, int n);

/// Terminating Gauss series 2F1(neg_a, b; c; z) with neg_a = -N <= 0:
/// sum_{k=0}^{N} (-N)_k (b)_k / ((c)_k k!) z^k, ascending k, compensated.
/// Exact polynomial; throws if c has a pole inside the truncation range.
double gauss_2f1_terminating(int neg_a, double b, double c, double z);

/// 2F1(neg_a, b; c; 1) by the Gauss summation formula
/// Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)). Requires c > 0, c - b > 0.
/// For the common case c = b+1 the exact product form N!/prod(b+j) is used.
double gauss_2f1_at_unity(int neg_a, double b, double c);

// Two-variable Kampe de Feriet series
//
//            [ (a_p) : (b_q) : (c_k)  |    ]    inf inf  prod(a)_{m+n} prod(b)_m prod(c)_n   x^m y^n
//   F        [                        | x,y] =  sum sum  ---------------------------------- -------
//            [ (al_r) : (be_m): (ga_n)|    ]    m=0 n=0  prod(al)_{m+n} prod(be)_m prod(ga)_n m! n!
//
// Evaluation is only supported for terminating specs: some upper_x (or
// upper_joint) parameter and some upper_y (or upper_joint) parameter must be
// a non-positive integer.
struct KdfSpec {
    std::vector<double> upper_joint;  // (a_p), Pochhammer on m+n
    std::vector<double> upper_x;      // (b_q), Pochhammer on m
    std::vector<double> upper_y;      // (c_k), Pochhammer on n
    std::vector<double> lower_joint;  // (alpha_r)
    std::vector<double> lower_x;      // (beta_m)
    std::vector<double> lower_y;      // (gamma_n)
    double x = 0.0;
    double y = 0.0;
};

/// Truncation orders implied by the non-positive-integer upper parameters.
/// Throws std::domain_error if the series does not terminate in a direction.
std::pair<int, int> kdf_termination_bounds(const KdfSpec& spec);

/// Finite double sum over the (max_x_order+1) x (max_y_order+1) grid with
/// compensated accumulation in fixed (row-major) order. The orders must be
/// at least the termination bounds; lower-parameter Pochhammer zeros inside
/// the grid throw std::domain_error.
double kdf_eval(const KdfSpec& spec, int max_x_order, int max_y_order);

/// Convenience overload evaluating at the implied termination bounds.
double kdf_eval(const KdfSpec& spec);

}  // namespace starcore::specfun

#endif
