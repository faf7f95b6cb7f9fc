#include "qpolylog/identities.hpp"

namespace qpl {

const char* conventions_text()
{
    return R"CONV(# Conventions

Frozen sign and index choices. Every line below was checked numerically
against an independent evaluation (direct series, mpmath, or exact residues).

## Basic objects

- sh(x) = e^x - e^-x, q = exp(i pi hbar), q_dual = exp(i pi / hbar), [k]_q = q^k - q^-k.
- F^hbar_{a,b,n}(omega) = i^{|n|-m} * integral over (R + i eps)^m of
  prod_k e^{-i p_k omega_k} / (sh^{a_k}(pi p_k) sh^{b_k}(pi hbar p_k) S_k^{n_k}) dp,
  with S_k = p_1 + ... + p_k.
- Contour height: eps = 0.5 * min(1, Re(hbar) / |hbar|^2); if every b_k = 0 the limit is 1.
- I-variant: I(w) = F(omega) with omega_j = w_j + ... + w_m.
  So F(omega_1, omega_2) = I(omega_1 - omega_2, omega_2) and I(z_1, z_2) = F(z_1 + z_2, z_2).
- Li_n(z_1..z_m) = sum over 0 < k_1 < ... < k_m of prod z_j^{k_j} / k_j^{n_j}.

## Depth one

- F_{a,0,n}(omega) = sum_{k=0}^{a-1} C(n+k-1, k) (-d/d omega)^k Q_{a-1}(omega) * Li_{n+k}(e^{omega + i pi a}).
  No i^n prefactor.
- Q_m(omega) = prod_{j<m} (omega - i pi (m-1-2j)) / ((2 pi i)^m m!).
- F_{1,0,0} = -e/(1+e), F_{2,0,0} = (omega/2 pi i) e/(1-e),
  F_{3,0,0} = (omega^2 + pi^2)/(2 (2 pi i)^2) * (-e/(1+e)), e = e^omega.

## q-polylogarithms and Psi

- Li_{a,n}(x;q) = octant sum of prod x_j^{k_j} / ([k_j]_q^{a_j} (k_1+...+k_j)^{n_j}).
- Li_{a,n}(x;1/q) = (-1)^{|a|} Li_{a,n}(x;q).
- Psi_a(x;q) = prod_{j>=0} (1 + q^{2j+a} x)^{(-1)^a C(j+a-1, a-1)}.
- log Psi_a(x;q) = -Li_{a,1}(-x;q) (index a, not a-1).
- Psi_a(qx) / Psi_a(x/q) = Psi_{a-1}(x).

## q-integral

- I^a x^k = -x^k / [k]_q^a, so I^0 = -identity and Delta I^a = I^{a-1},
  Delta x^k = [k]_q x^k.
- Li_{a,n}(x;q) = (-1)^m prod I^{a_j} applied to Li_n; at m = 1 this is -I^a Li_n.
- Li_{a,n}(x;q) = -(-1)^{a-1} sum_{k>=0} C(k+a-1, a-1) Li_n(q^{2k+a} x).

## Companion series

- Slot term: eps_j (-1)^{k_j a_j} e^{k_j eps_j omega_j} / [k_j]_{q_{eps_j}}^{a_j}, eps_j in {1, 1/hbar},
  over prod S_i^{n_i} with S_i = sum_{j<=i} eps_j k_j; I is the sum over all 2^m choices.
- Depth one: I(w) = Li_{1,n}(-e^w; q) + hbar^{n-1} Li_{1,n}(-e^{w/hbar}; q_dual), both signs +.

## Symmetries of F

- Modular: F^hbar_{a,b,n}(omega) = hbar^{|n|-m} F^{1/hbar}_{b,a,n}(omega/hbar).
- Conjugation: conj F^hbar(omega) = (-1)^{|a|+|b|-m} F^{conj hbar}(conj omega).
- Negation (depth one): F(omega) + (-1)^{a+b+n-1} F(-omega) = -B_{a,b,n}(omega).
- Distribution: r^{m-|n|} F^{(r/s) hbar}(r omega) = sum over alpha, beta of
  F^hbar(omega_k + (2 pi i / r) sum alpha + (2 pi i hbar / s) sum beta), alpha ranging over
  a_k-fold tuples from {(1-r)/2, ..., (r-1)/2}, beta over b_k-fold tuples from {(1-s)/2, ..., (s-1)/2}.
- Difference: F(omega + i pi e_k) - F(omega - i pi e_k) = F with a_k lowered;
  the shift i pi hbar lowers b_k.
- Differential: d/d omega_k F = F_{n - 1_k} - F_{n - 1_{k-1}}.

## hbar = 1

- A_j = a_j + b_j, z_j = (-1)^{A_j} e^{omega_j}.
- F^1 = sum_c i^{-|c|} prod_j C(-n_j, c_j) * [prod_j T_j^{c_j}, T_j = t_1 + ... + t_j, expanded
  into monomials t^beta, each replaced by prod_j (i d/d omega_j)^{beta_j} Q_{A_j-1}(omega_j)]
  * Li^octant_{n+c}(z). Finite: beta_j <= A_j - 1.
- The bare product prod Q_{A_j-1}(omega_j) Li_n(z) is only the c = 0 term.

## Asymptotics (hbar -> 0+)

- (2 pi i hbar) F^hbar_{1,1,n}(omega) -> Li_{n+1}(-e^omega).
- F^hbar_{a,b,n} ~ (2 pi i hbar)^{-b} F_{a,0,n+b}.
- Depth m, a = b = 1: (2 pi i hbar)^m F -> sum over k in Z_{>0}^m of prod (-e^{omega_j})^{k_j} / (k_j S_j^{n_j}).

## Quantum Bernoulli polynomials

- B_{a,b,n}(omega) = i^{n-1} 2 pi i Res_{p=0} e^{-i p omega} / (sh^a(pi p) sh^b(pi hbar p) p^n),
  a polynomial of degree a+b+n-1 in omega with Laurent coefficients in hbar.
- B_{a,0,0} = Q_{a-1}; B_{1,0,n} = (2 pi i)^n / n! * B_n(omega / (2 pi i) + 1/2).
- B(-omega) = (-1)^{a+b+n+1} B(omega); conj B (real omega, hbar) = (-1)^{a+b+1} B.
- B^hbar_{a,b,n}(omega) = hbar^{n-1} B^{1/hbar}_{b,a,n}(omega/hbar).
- d/d omega B_{a,b,n} = B_{a,b,n-1}; shifts by i pi and i pi hbar lower a and b.
- At hbar = 1: B_{a,b,n} = B_{a+b,0,n}.
- Q_m(omega) = (omega - i pi (m-1)) / (2 pi i m) * Q_{m-1}(omega + i pi).

## zeta_hbar

- zeta_hbar(s) = integral of prod dp / (sh(pi p_k) sh(pi hbar p_k) S_k^{s_k - 1}), no prefactor;
  equals i^{m-|n|} F_{1,1,s-1}(0).
- zeta_hbar(s) = hbar^{sum(s-1) - m} zeta_{1/hbar}(s).

## Generating function

- G(omega; r, s, u) = sum r^{a-1} s^{b-1} u^{n-1} F_{a,b,n}(omega), depth one, |r|, |s| <= 1/2, |u| < 0.8 eps.

## Shuffle

- F_{a1,b1,1}(w1) F_{a2,b2,1}(w2) = F_{(a1,a2),(b1,b2),(1,1)}(w1,w2) + F_{(a2,a1),(b2,b1),(1,1)}(w2,w1).

## Calibration numbers

- Li_2(0.9) = 1.29971472300496
- Li_{1,1}(0.3, 0.4) = 0.0347270885637191
- Li_{(1,1),(1,1)}(0.2, 0.3; 0.4) = 0.00749438406620
- F_{1,0,0}(-1) = -0.26894142137
- F_{2,0,1}(-1) = 0.13805568200333 i
- I_{(1,1),(1,1),(1,1)}(-2, -1) at hbar = sqrt 2: -0.00415795795029463
)CONV";
}

}  // namespace qpl
