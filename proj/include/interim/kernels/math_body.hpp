#pragma once

#include <cstdint>
#include <limits>

// Lane-generic bodies of the math kernels. Each body is a fixed sequence of
// correctly-rounded IEEE operations on the lane type V (ScalarVec or Avx2Vec),
// which is what makes the two instantiations bit-identical per lane. Fused
// multiply-adds are explicit; the build disables implicit contraction.

namespace interim::kern::body {

// round-to-nearest-integer magic (2^52 + 2^51); valid for |x| < 2^51
inline constexpr double kRoundMagic = 6755399441055744.0;
inline constexpr std::int64_t kRoundMagicBits = 0x4338000000000000ll;

// ---------------------------------------------------------------------------
// exp: Cephes-style rational approximation with hi/lo ln2 range reduction.
// ---------------------------------------------------------------------------

inline constexpr double kLog2E = 1.4426950408889634073599;
inline constexpr double kLn2Hi = 6.93145751953125e-1;
inline constexpr double kLn2Lo = 1.42860682030941723212e-6;
inline constexpr double kExpOverflow = 709.782712893384;
inline constexpr double kExpUnderflow = -745.2;

inline constexpr double kExpP[3] = {1.26177193074810590878e-4, 3.02994407707441961300e-2,
                                    9.99999999999999999910e-1};
inline constexpr double kExpQ[4] = {3.00198505138664455042e-6, 2.52448340349684104192e-3,
                                    2.27265548208155028766e-1, 2.00000000000000000005e0};

// 2^n for n in [-2000, 2000], split into two normal-range factors
template <class V>
inline typename V::vd scale_pow2(typename V::vd y, typename V::vi n) {
    // n1 = floor-half via logical shift on the biased value, n2 = n - n1
    auto nb = V::addi(n, V::set1i(2048));
    auto n1 = V::subi(V::template srli<1>(nb), V::set1i(1024));
    auto n2 = V::subi(n, n1);
    auto sc1 = V::itod_bits(V::template slli<52>(V::addi(n1, V::set1i(1023))));
    auto sc2 = V::itod_bits(V::template slli<52>(V::addi(n2, V::set1i(1023))));
    return V::mul(V::mul(y, sc1), sc2);
}

template <class V>
inline typename V::vd exp_core(typename V::vd x) {
    using vd = typename V::vd;
    const vd magic = V::set1(kRoundMagic);
    vd t = V::fma(x, V::set1(kLog2E), magic);
    vd n_d = V::sub(t, magic);
    auto n_i = V::subi(V::dtoi_bits(t), V::set1i(kRoundMagicBits));

    vd r = V::fma(n_d, V::set1(-kLn2Hi), x);
    r = V::fma(n_d, V::set1(-kLn2Lo), r);

    vd rr = V::mul(r, r);
    vd px = V::fma(V::set1(kExpP[0]), rr, V::set1(kExpP[1]));
    px = V::fma(px, rr, V::set1(kExpP[2]));
    px = V::mul(px, r);
    vd qx = V::fma(V::set1(kExpQ[0]), rr, V::set1(kExpQ[1]));
    qx = V::fma(qx, rr, V::set1(kExpQ[2]));
    qx = V::fma(qx, rr, V::set1(kExpQ[3]));

    vd y = V::add(V::set1(1.0), V::div(V::add(px, px), V::sub(qx, px)));
    vd res = scale_pow2<V>(y, n_i);

    res = V::select(V::gt(x, V::set1(kExpOverflow)), V::set1(std::numeric_limits<double>::infinity()), res);
    res = V::select(V::lt(x, V::set1(kExpUnderflow)), V::set1(0.0), res);
    res = V::select(V::unord(x, x), x, res);
    return res;
}

// ---------------------------------------------------------------------------
// log: decompose x = m * 2^e with m in [sqrt(1/2), sqrt(2)), then
// log(m) = 2 atanh(s), s = (m-1)/(m+1), with the exact Taylor coefficients
// 1/3, 1/5, ..., 1/21 (truncation error below 1e-18 on this interval).
// ---------------------------------------------------------------------------

inline constexpr double kSqrtHalf = 0.70710678118654752440;
inline constexpr double kLogLn2Hi = 6.93147180369123816490e-1;
inline constexpr double kLogLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kTwo54 = 18014398509481984.0;

template <class V>
inline typename V::vd log_core(typename V::vd x) {
    using vd = typename V::vd;
    const vd min_normal = V::set1(2.2250738585072014e-308);

    auto is_sub = V::lt(x, min_normal);  // subnormals, zero, negatives
    vd xs = V::select(is_sub, V::mul(x, V::set1(kTwo54)), x);
    auto bits = V::dtoi_bits(xs);
    auto e_raw = V::andi(V::template srli<52>(bits), V::set1i(0x7FF));
    auto e = V::subi(e_raw, V::set1i(1022));
    e = V::selecti(is_sub, V::subi(e, V::set1i(54)), e);

    auto m_bits = V::ori(V::andi(bits, V::set1i(0x000FFFFFFFFFFFFFll)), V::set1i(0x3FE0000000000000ll));
    vd m = V::itod_bits(m_bits);
    auto low = V::lt(m, V::set1(kSqrtHalf));
    m = V::select(low, V::add(m, m), m);
    e = V::selecti(low, V::subi(e, V::set1i(1)), e);

    vd s = V::div(V::sub(m, V::set1(1.0)), V::add(m, V::set1(1.0)));
    vd w = V::mul(s, s);
    vd p = V::set1(1.0 / 21.0);
    p = V::fma(p, w, V::set1(1.0 / 19.0));
    p = V::fma(p, w, V::set1(1.0 / 17.0));
    p = V::fma(p, w, V::set1(1.0 / 15.0));
    p = V::fma(p, w, V::set1(1.0 / 13.0));
    p = V::fma(p, w, V::set1(1.0 / 11.0));
    p = V::fma(p, w, V::set1(1.0 / 9.0));
    p = V::fma(p, w, V::set1(1.0 / 7.0));
    p = V::fma(p, w, V::set1(1.0 / 5.0));
    p = V::fma(p, w, V::set1(1.0 / 3.0));
    vd s2 = V::add(s, s);
    vd t = V::add(s2, V::mul(V::mul(s2, w), p));

    // e as a double via the signed-magic trick
    vd e_d = V::sub(V::itod_bits(V::addi(e, V::set1i(kRoundMagicBits))), V::set1(kRoundMagic));
    vd res = V::fma(e_d, V::set1(kLogLn2Lo), t);
    res = V::fma(e_d, V::set1(kLogLn2Hi), res);

    const vd inf = V::set1(std::numeric_limits<double>::infinity());
    const vd qnan = V::set1(std::numeric_limits<double>::quiet_NaN());
    res = V::select(V::eq(x, V::set1(0.0)), V::neg(inf), res);
    res = V::select(V::lt(x, V::set1(0.0)), qnan, res);
    res = V::select(V::eq(x, inf), inf, res);
    res = V::select(V::unord(x, x), x, res);
    return res;
}

// ---------------------------------------------------------------------------
// Inverse standard normal CDF: Wichura's PPND16 (AS 241) rational
// approximations, all three branches evaluated and blended by mask.
// ---------------------------------------------------------------------------

inline constexpr double kPpndA[8] = {3.3871328727963666080e0,  1.3314166789178437745e2,
                                     1.9715909503065514427e3,  1.3731693765509461125e4,
                                     4.5921953931549871457e4,  6.7265770927008700853e4,
                                     3.3430575583588128105e4,  2.5090809287301226727e3};
inline constexpr double kPpndB[8] = {1.0,                      4.2313330701600911252e1,
                                     6.8718700749205790830e2,  5.3941960214247511077e3,
                                     2.1213794301586595867e4,  3.9307895800092710610e4,
                                     2.8729085735721942674e4,  5.2264952788528545610e3};
inline constexpr double kPpndC[8] = {1.42343711074968357734e0, 4.63033784615654529590e0,
                                     5.76949722146069140550e0, 3.64784832476320460504e0,
                                     1.27045825245236838258e0, 2.41780725177450611770e-1,
                                     2.27238449892691845833e-2, 7.74545014278341407640e-4};
inline constexpr double kPpndD[8] = {1.0,                      2.05319162663775882187e0,
                                     1.67638483018380384940e0, 6.89767334985100004550e-1,
                                     1.48103976427480074590e-1, 1.51986665636164571966e-2,
                                     5.47593808499534494600e-4, 1.05075007164441684324e-9};
inline constexpr double kPpndE[8] = {6.65790464350110377720e0, 5.46378491116411436990e0,
                                     1.78482653991729133580e0, 2.96560571828504891230e-1,
                                     2.65321895265761230930e-2, 1.24266094738807843860e-3,
                                     2.71155556874348757815e-5, 2.01033439929228813265e-7};
inline constexpr double kPpndF[8] = {1.0,                      5.99832206555887937690e-1,
                                     1.36929880922735805310e-1, 1.48753612908506148525e-2,
                                     7.86869131145613259100e-4, 1.84631831751005468180e-5,
                                     1.42151175831644588870e-7, 2.04426310338993978564e-15};

template <class V>
inline typename V::vd poly8(const double (&c)[8], typename V::vd r) {
    typename V::vd p = V::set1(c[7]);
    p = V::fma(p, r, V::set1(c[6]));
    p = V::fma(p, r, V::set1(c[5]));
    p = V::fma(p, r, V::set1(c[4]));
    p = V::fma(p, r, V::set1(c[3]));
    p = V::fma(p, r, V::set1(c[2]));
    p = V::fma(p, r, V::set1(c[1]));
    p = V::fma(p, r, V::set1(c[0]));
    return p;
}

template <class V>
inline typename V::vd inv_norm_cdf_core(typename V::vd u) {
    using vd = typename V::vd;
    vd q = V::sub(u, V::set1(0.5));
    auto central = V::le(V::abs(q), V::set1(0.425));

    vd rc = V::fma(V::neg(q), q, V::set1(0.180625));
    rc = V::select(central, rc, V::set1(0.0));
    vd zc = V::mul(q, V::div(poly8<V>(kPpndA, rc), poly8<V>(kPpndB, rc)));

    vd r0 = V::min(u, V::sub(V::set1(1.0), u));
    r0 = V::select(central, V::set1(0.25), r0);
    vd s = V::sqrt(V::neg(log_core<V>(r0)));
    auto near = V::le(s, V::set1(5.0));
    vd sn = V::sub(s, V::set1(1.6));
    vd sf = V::sub(s, V::set1(5.0));
    vd zn = V::div(poly8<V>(kPpndC, sn), poly8<V>(kPpndD, sn));
    vd zf = V::div(poly8<V>(kPpndE, sf), poly8<V>(kPpndF, sf));
    vd zt = V::select(near, zn, zf);
    zt = V::select(V::lt(q, V::set1(0.0)), V::neg(zt), zt);

    vd z = V::select(central, zc, zt);

    const vd inf = V::set1(std::numeric_limits<double>::infinity());
    const vd qnan = V::set1(std::numeric_limits<double>::quiet_NaN());
    z = V::select(V::eq(u, V::set1(0.0)), V::neg(inf), z);
    z = V::select(V::eq(u, V::set1(1.0)), inf, z);
    z = V::select(V::mor(V::lt(u, V::set1(0.0)), V::gt(u, V::set1(1.0))), qnan, z);
    z = V::select(V::unord(u, u), u, z);
    return z;
}

// ---------------------------------------------------------------------------
// Standard normal CDF: Phi(x) = erfc(-x/sqrt(2))/2 with Cody's rational
// approximations for erf/erfc and a split-argument exp for the tails.
// ---------------------------------------------------------------------------

inline constexpr double kErfA[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                                    3.77485237685302021e2, 3.20937758913846947e3,
                                    1.85777706184603153e-1};
inline constexpr double kErfB[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                                    1.28261652607737228e3, 2.84423683343917062e3};
inline constexpr double kErfC[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                                    6.61191906371416295e1, 2.98635138197400131e2,
                                    8.81952221241769090e2, 1.71204761263407058e3,
                                    2.05107837782607147e3, 1.23033935479799725e3,
                                    2.15311535474403846e-8};
inline constexpr double kErfD[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                                    5.37181101862009858e2, 1.62138957456669019e3,
                                    3.29079923573345963e3, 4.36261909014324716e3,
                                    3.43936767414372164e3, 1.23033935480374942e3};
inline constexpr double kErfP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                    1.25781726111229246e-1, 1.60837851487422766e-2,
                                    6.58749161529837803e-4, 1.63153871373020978e-2};
inline constexpr double kErfQ[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                                    5.27905102951428412e-1, 6.05183413124413191e-2,
                                    2.33520497626869185e-3};
inline constexpr double kInvSqrtPi = 5.6418958354775628695e-1;
inline constexpr double kNegInvSqrt2 = -0.70710678118654752440;

// exp(-y^2) as exp(-ysq*ysq) * exp(-del) with ysq = trunc(16 y)/16
template <class V>
inline typename V::vd exp_neg_ysq(typename V::vd y) {
    using vd = typename V::vd;
    vd ysq = V::mul(V::trunc(V::mul(y, V::set1(16.0))), V::set1(0.0625));
    vd del = V::mul(V::sub(y, ysq), V::add(y, ysq));
    vd e1 = exp_core<V>(V::neg(V::mul(ysq, ysq)));
    vd e2 = exp_core<V>(V::neg(del));
    return V::mul(e1, e2);
}

template <class V>
inline typename V::vd norm_cdf_core(typename V::vd x) {
    using vd = typename V::vd;
    vd a = V::mul(x, V::set1(kNegInvSqrt2));
    vd y = V::abs(a);

    // |a| <= 0.46875 : erfc(a) = 1 - a * R1(a^2)
    auto small_m = V::le(y, V::set1(0.46875));
    vd ysq = V::select(V::gt(y, V::set1(1.11e-16)), V::mul(y, y), V::set1(0.0));
    vd num = V::mul(V::set1(kErfA[4]), ysq);
    vd den = ysq;
    num = V::mul(V::add(num, V::set1(kErfA[0])), ysq);
    den = V::mul(V::add(den, V::set1(kErfB[0])), ysq);
    num = V::mul(V::add(num, V::set1(kErfA[1])), ysq);
    den = V::mul(V::add(den, V::set1(kErfB[1])), ysq);
    num = V::mul(V::add(num, V::set1(kErfA[2])), ysq);
    den = V::mul(V::add(den, V::set1(kErfB[2])), ysq);
    vd erf_small = V::mul(a, V::div(V::add(num, V::set1(kErfA[3])), V::add(den, V::set1(kErfB[3]))));
    vd erfc_small = V::sub(V::set1(1.0), erf_small);

    // 0.46875 < |a| <= 4
    vd yc = V::select(small_m, V::set1(1.0), y);  // keep tail args benign on small lanes
    vd num2 = V::mul(V::set1(kErfC[8]), yc);
    vd den2 = yc;
    num2 = V::mul(V::add(num2, V::set1(kErfC[0])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[0])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[1])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[1])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[2])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[2])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[3])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[3])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[4])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[4])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[5])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[5])), yc);
    num2 = V::mul(V::add(num2, V::set1(kErfC[6])), yc);
    den2 = V::mul(V::add(den2, V::set1(kErfD[6])), yc);
    vd r_mid = V::div(V::add(num2, V::set1(kErfC[7])), V::add(den2, V::set1(kErfD[7])));
    vd erfc_mid = V::mul(exp_neg_ysq<V>(yc), r_mid);

    // |a| > 4 : erfc(y) = exp(-y^2)/y * (1/sqrt(pi) + R3(1/y^2)/y^2)
    vd iysq = V::div(V::set1(1.0), V::mul(yc, yc));
    vd num3 = V::mul(V::set1(kErfP[5]), iysq);
    vd den3 = iysq;
    num3 = V::mul(V::add(num3, V::set1(kErfP[0])), iysq);
    den3 = V::mul(V::add(den3, V::set1(kErfQ[0])), iysq);
    num3 = V::mul(V::add(num3, V::set1(kErfP[1])), iysq);
    den3 = V::mul(V::add(den3, V::set1(kErfQ[1])), iysq);
    num3 = V::mul(V::add(num3, V::set1(kErfP[2])), iysq);
    den3 = V::mul(V::add(den3, V::set1(kErfQ[2])), iysq);
    num3 = V::mul(V::add(num3, V::set1(kErfP[3])), iysq);
    den3 = V::mul(V::add(den3, V::set1(kErfQ[3])), iysq);
    vd r_far = V::mul(iysq, V::div(V::add(num3, V::set1(kErfP[4])), V::add(den3, V::set1(kErfQ[4]))));
    r_far = V::div(V::sub(V::set1(kInvSqrtPi), r_far), yc);
    vd erfc_far = V::mul(exp_neg_ysq<V>(yc), r_far);

    auto mid_m = V::le(y, V::set1(4.0));
    vd erfc_tail = V::select(mid_m, erfc_mid, erfc_far);
    erfc_tail = V::select(V::lt(a, V::set1(0.0)), V::sub(V::set1(2.0), erfc_tail), erfc_tail);

    vd erfc = V::select(small_m, erfc_small, erfc_tail);
    vd res = V::mul(V::set1(0.5), erfc);
    res = V::select(V::unord(x, x), x, res);
    return res;
}

// 52-bit uniform grid on (0,1): u = (j + 0.5) / 2^52 with j = bits >> 12
template <class V>
inline typename V::vd u01_from_bits(typename V::vi u64) {
    auto j = V::template srli<12>(u64);
    auto d = V::sub(V::itod_bits(V::ori(j, V::set1i(0x4330000000000000ll))), V::set1(4503599627370496.0));
    return V::mul(V::add(d, V::set1(0.5)), V::set1(2.220446049250313080847e-16));
}

}  // namespace interim::kern::body
