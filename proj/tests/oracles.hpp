#pragma once

#include <complex>

// Reference values for the special-function and spherical-function tests.
// Every row was computed independently with 50-digit arbitrary-precision
// arithmetic and rounded to the nearest double; the tables are frozen so the
// test suite never depends on the code under test for its expectations.

namespace oracles {

using cplx = std::complex<double>;

// ---- Gamma: {z_re, z_im, gamma_re, gamma_im} -------------------------------
inline constexpr double gamma_table[][4] = {
    {0.5, 0.0, 1.77245385090551603, 0.0},
    {1.0, 0.0, 1.0, 0.0},
    {6.0, 0.0, 120.0, 0.0},
    {0.5, 3.0, 0.0214456705524306461, 0.00686536483726167791},
    {1.0, 1.0, 0.498015668118356043, -0.154949828301810685},
    {-2.5, 0.0, -0.945308720482941881, 0.0},
    {-0.5, -1.5, -0.139202733261629692, 0.0565530730374319981},
    {10.0, 10.0, 1423.85194178918307, -3496.08197330794459},
    {18.0, 2.0, 269863884304969.91, -167010374695604.145},
    {0.001, 0.0, 999.423772484595466, 0.0},
    {0.5, 19.0, 1.99891963965923102e-13, -1.87183483138612784e-13},
};

// ---- digamma: {z_re, z_im, psi_re, psi_im} ---------------------------------
inline constexpr double digamma_table[][4] = {
    {1.0, 0.0, -0.577215664901532861, 0.0},
    {0.5, 0.0, -1.96351002602142348, 0.0},
    {1.0, 1.0, 0.0946503206224769773, 1.07667404746858117},
    {-1.5, 0.0, 0.703156640645243187, 0.0},
    {3.2, -2.0, 1.21307951512685333, -0.634051741582232364},
    {0.2, 0.0, -5.2890398965921883, 0.0},
};

// ---- 2F1: {a_re,a_im, b_re,b_im, c_re,c_im, z_re,z_im, f_re,f_im} ----------
// Coverage: direct series, all four z -> 1 connection cases (generic sigma,
// sigma = 0, sigma = positive/negative integer), the z/(z-1) transform for
// large |z|, terminating polynomial cases, and near-boundary arguments.
inline constexpr double f21_table[][10] = {
    {0.3, 0.0, 0.7, 0.0, 1.1, 0.0, 0.35, 0.0, 1.08304288255335631, 0.0},
    {0.5, 1.5, 0.25, -0.5, 2.5, 0.0, -0.4, 0.3,
     0.86767878205698746, 0.0665784387506365501},
    {0.5, 0.0, 0.5, 0.0, 1.2, 0.0, 0.95, 0.0, 1.58779716159530352, 0.0},
    {1.5, 0.5, 0.5, 0.0, 2.6, 0.5, 0.9, 0.0,
     1.63006505300973878, 0.12290822739657366},
    {0.5, 0.0, 0.5, 0.0, 1.0, 0.0, 0.9, 0.0, 1.64126441434237073, 0.0},
    {1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.99, 0.0, 4.65168705655362764, 0.0},
    {0.5, 0.0, 0.7, 0.0, 2.2, 0.0, 0.93, 0.0, 1.28435407940458392, 0.0},
    {0.25, 0.0, 0.5, 0.0, 2.75, 0.0, 0.97, 0.0, 1.06416967855252186, 0.0},
    {1.3, 0.0, 0.9, 0.0, 1.2, 0.0, 0.92, 0.0, 12.0658012418584657, 0.0},
    {1.5, 0.0, 1.7, 0.0, 1.2, 0.0, 0.95, 0.0, 452.761792402717808, 0.0},
    {2.5, 0.0, 1.7, 0.0, 1.2, 0.0, 0.9, 0.0, 1470.5357143011328, 0.0},
    {0.8, 0.0, 1.2, 0.0, 1.7, 0.0, -30.0, 0.0, 0.107308422175392362, 0.0},
    {2.5, 1.0, 2.5, -1.0, 4.0, 0.0, -100.0, 0.0,
     -9.82046386981489567e-06, 0.0},
    {0.8, 0.0, 0.6, 0.0, 1.9, 0.0, -200.0, 0.0, 0.119074823654318608, 0.0},
    {2.5, 0.0, 1.5, 0.0, 4.0, 0.0, -80.0, 0.0, 0.00427274842728353746, 0.0},
    {2.5, 1.5, 2.5, -1.5, 4.0, 0.0, -50.0, 0.0,
     -2.27042443944295446e-05, 0.0},
    {-3.0, 0.0, 2.2, 0.0, 1.1, 0.0, 5.5, 0.0, -442.3963133640553, 0.0},
    {-5.0, 0.0, 1.0, 1.0, 2.0, -1.0, -3.0, 4.0,
     1472.0379112143818, -1272.16411887000122},
    {0.5, 0.0, 0.5, 0.0, 2.0, 0.0, 0.99999999, 0.0,
     1.2732394868241867, 0.0},
    {1.0, 0.0, 0.5, 0.0, 1.5, 0.0, 0.9999999999, 0.0,
     12.2060726047452936, 0.0},
};

// ---- spherical functions, real time: {algebra-id, lam_re, lam_im, t, phi} --
// algebra-id: 0 = so(1,3), 1 = so(1,4), 2 = su(1,1), 3 = su(1,2),
//             4 = sp(1,2), 5 = f4(-20)
inline constexpr double spherical_real_table[][5] = {
    {0, 0.0, 1.0, 1.0, 0.716022915360433871},
    {0, 0.5, 0.0, 2.0, 0.6480542736638854},
    {0, 0.0, 1.0, 6.0, -0.00138521205974685439},
    {4, 2.0, 0.0, 1.5, 0.752268902605102112},
    {4, 0.0, 1.3, 3.0, 0.0160929430576810852},
    {3, 0.0, 0.8, 1.0, 0.815766380007468415},
    {5, 0.0, 1.0, 0.8, 0.54127310965304171},
    {2, 0.3, 0.0, 2.5, 0.80803779916488525},
};

// ---- spherical functions, imaginary time: same layout ----------------------
inline constexpr double spherical_imag_table[][5] = {
    {0, 0.0, 1.0, 2.0, 3.98864035116456102},
    {0, 0.0, 1.0, 3.0, 70.988338685185075},
    {1, 0.0, 0.5, 3.0, 315.315852492403413},
    {2, 0.3, 0.0, 3.1, 2.40351780907214809},
    {4, 0.0, 1.0, 3.0, 1025.28700770267833},
    {5, 0.0, 0.7, 2.9, 1264485.85646988847},
};

// ---- twisted (chi) spherical, imaginary time: {l, lam_re, lam_im, n, t, v} -
inline constexpr double chi_imag_table[][6] = {
    {2, 0.0, 0.8, 2, 1.2, 1.50809487044366666},
    {1, 0.4, 0.0, 3, 2.0, 2.54153782016196644},
    {-2, 0.0, 0.8, 2, 2.8, 38.1707250043588126},
};

// ---- boundary limits for so(1,3): {lam_re, lam_im, limit} ------------------
inline constexpr double so13_boundary_table[][3] = {
    {0.0, 1.0, 5.77436967862887419},
    {0.0, 2.0, 66.9362235102541286},
    {0.5, 0.0, 1.0},  // exact: the gamma factors cancel at lambda = rho/2
};

// chi boundary limit for (l, n) = (2, 2), lambda = 0.8i:
inline constexpr cplx chi_boundary_22_08i{1.10755927674276169, 0.0};

// ---- Laplace transforms of power-tail measures: {s, t, L} ------------------
inline constexpr double laplace_power_table[][3] = {
    {1.0, 0.0625, 2.25690990083634923},
    {1.0, 0.0009765625, 6.3552324648310718},
    {1.0, 5.9604644775390625e-08, 16.0583167281417985},
    {0.5, 0.0009765625, 54.7191740799526565},
    {0.5, 5.9604644775390625e-08, 7257.97097334873008},
    {0.5, 5.6843418860808015e-14, 7434208.2766684095},
    {2.0, 0.0625, 0.798356194011203959},
    {2.0, 5.9604644775390625e-08, 0.999998983245092729},
    {3.0, 5.9604644775390625e-08, 0.499999940395386414},
    {0.0, 1.0, 0.367879441171442322},
    {0.0, 0.25, 3.11520313228561947},
};

// ---- log Laplace transform of the c = 1 stretched-exponential: {t, ln L} ---
inline constexpr double laplace_stretched_table[][2] = {
    {0.5, 2.00554926296759661},
    {0.25, 3.63154824884777445},
    {0.125, 5.68947675116081091},
    {0.0625, 8.73118073412116513},
    {0.00390625, 72.8901311096440438},
};

}  // namespace oracles
