#pragma once

// Bundled identity catalog, grouped by source section. Each stanza is a
// machine-checkable equality over the declared parameter sweeps; `paper`
// carries the source-equation tag the entry was transcribed from.

namespace wpb::corpus_text {

inline const char* section2() {
    return R"__cat(
# Single-sum transformation and summation formulas.

identity "eq2.5" {
  paper "Eq 2.5"
  lattice 2
  int n range 0..6
  mono a, k, rho1, rho2
  bind a = q, k = q^4, rho1 = q, rho2 = -q
  bind a = q^2, k = q^5, rho1 = -q, rho2 = q^2
  bind a = q, k = -q^3, rho1 = 2*q, rho2 = -q^2
  let c = k*rho1*rho2/(a*q)
  constraint "c != 1; a*q/rho_i, c*q, k*q and the sqrt(a) lattice stay pole-free over the sweep"
  lhs W(a, [rho1, rho2, a/c, k*qpow(n), qpow(-n)], q, q)
  rhs poch(a*q, n)*poch(k/c, n)*poch(k*rho1/a, n)*poch(k*rho2/a, n) /
      (poch(c*q, n)*poch(k/a, n)*poch(a*q/rho1, n)*poch(a*q/rho2, n))
}

identity "eq2.9" {
  paper "Eq 2.9"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2, sigma1, sigma2
  bind a = q, k = q^6, rho1 = q, rho2 = -q, sigma1 = -q, sigma2 = -q^(-1)
  bind a = q^2, k = q^7, rho1 = -q, rho2 = q^2, sigma1 = -q^2, sigma2 = -q^(-1)
  let c = k*rho1*rho2/(a*q)
  let ct = k*sigma1*sigma2/(a*q)
  constraint "ct must have a square coefficient; neither c nor ct may equal 1"
  lhs W(a, [rho1, rho2, a*k/(c*ct), sigma1, sigma2, k*qpow(n), qpow(-n)], q, q)
  rhs poch(a*q, n)*poch(k/ct, n)*poch(k*sigma1/a, n)*poch(k*sigma2/a, n) /
      (poch(ct*q, n)*poch(k/a, n)*poch(a*q/sigma1, n)*poch(a*q/sigma2, n)) *
      W(ct, [ct*rho1/a, ct*rho2/a, k/c, sigma1, sigma2, k*qpow(n), qpow(-n)], q, q)
}

identity "eq2.12" {
  paper "Eq 2.12"
  lattice 2
  int n range 0..5
  mono a, k, rho1, rho2
  bind a = q^2, k = q^4, rho1 = -q, rho2 = q^2
  bind a = q^3, k = q^4, rho1 = -q, rho2 = -q^2
  constraint "k needs a square coefficient for sqrt(k)"
  lhs W(a, [a*msqrt(q/k), -(a*msqrt(q/k)), a*q/msqrt(k), -(a*q/msqrt(k)), rho1, rho2,
            k/(rho1*rho2), k*qpow(n), qpow(-n)], q, q)
  rhs poch(a*q, n)*poch(k^2/(q*a^2), n)/(poch(k, n)*poch(k/a, n)) *
      phi([q*a^2/k, a*q*rho1/k, a*q*rho2/k, a*q/(rho1*rho2), qpow(-n)],
          [a*q/rho1, a*q/rho2, a*q*rho1*rho2/k, a^2*qpow(2-n)/k^2], q, q)
}

identity "eq2.13" {
  paper "Eq 2.13"
  lattice 2
  int n range 0..6
  mono a, k
  bind a = q^2, k = -q^3
  bind a = q^4, k = -q^3
  let s = msqrt(a)
  constraint "a needs a square coefficient; the complex insertion parameters are folded into the real product form"
  lhs sum(j, 0, n,
        poch(s, j, msqrt(q))*(1 - s*qpow(j))/(poch(msqrt(q), j, msqrt(q))*(1 - s)) *
        poch(-(q*s), j)/poch(-s, j) *
        poch(a/k, j, msqrt(q))/poch(k*msqrt(q/a), j, msqrt(q)) *
        poch(k*qpow(n), j)/poch((a/k)*qpow(1-n), j) *
        poch(qpow(-n), j)/poch(a*qpow(1+n), j) * qpow(j/2))
  rhs poch(a*q, n)*poch(a/k, n)/(poch(k/a, n)*poch(q*k^2/a, n)) *
      poch(-(k*msqrt(q/a)), 2*n, msqrt(q))/poch(-s, 2*n, msqrt(q)) *
      mpow(k/(a*msqrt(q)), n)
}
)__cat";
}

inline const char* section3() {
    return R"__cat(
identity "eq3.1" {
  paper "Eq 3.1"
  lattice 2
  int n range 0..6
  mono a, k
  bind a = q^2, k = q^4
  bind a = q^4, k = q^6
  lhs W(a, [a*msqrt(q/k), -(a*msqrt(q/k)), a*q/msqrt(k), -(a*q/msqrt(k)), k/(a*q),
            k*qpow(n), qpow(-n)], q, q)
  rhs poch(a*q, n)*poch(k^2/(q*a^2), n)/(poch(k, n)*poch(k/a, n))
}

identity "eq3.2" {
  paper "Eq 3.2"
  lattice 2
  int n range 0..6
  mono a, k
  bind a = q^3, k = q^4
  bind a = q^4, k = q^6
  lhs W(a, [a*msqrt(q/k), -(a*msqrt(q/k)), a/msqrt(k), -(a*q/msqrt(k)), k/a,
            k*qpow(n), qpow(-n)], q, q)
  rhs poch(a*q, n)*poch(msqrt(k), n)*poch(k^2/a^2, n) /
      (poch(k, n)*poch(k/a, n)*poch(q*msqrt(k), n))
}

identity "eq3.7" {
  paper "Eq 3.7"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2
  bind a = q, k = q^6, rho1 = -2, rho2 = -2*q
  bind a = q^2, k = q^7, rho1 = -2*q, rho2 = -2*q^2
  let c = k*rho1*rho2/(a*q)
  let sc = msqrt(c)
  constraint "c needs a positive square coefficient"
  lhs W(a, [a*msqrt(q)/sc, -(a*msqrt(q)/sc), a*q/sc, -(a*q/sc), c/(a*q), rho1, rho2,
            k*qpow(n), qpow(-n)], q, q)
  rhs poch(k*rho1/a, n)*poch(k*rho2/a, n)*poch(k/c, n)*poch(a*q, n) /
      (poch(a*q/rho1, n)*poch(a*q/rho2, n)*poch(k/a, n)*poch(c*q, n)) *
      phi([c^2/(q*a^2), q*sc, -(q*sc), rho1, rho2, k*qpow(n), qpow(-n)],
          [sc, -sc, k*rho1/a, k*rho2/a, (c/k)*qpow(1-n), c*qpow(1+n)], q, q)
}

identity "eq3.8" {
  paper "Eq 3.8"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2
  bind a = q, k = q^6, rho1 = -2, rho2 = -2*q
  bind a = q^2, k = q^7, rho1 = -2*q, rho2 = -2*q^2
  let c = k*rho1*rho2/(a*q)
  let sc = msqrt(c)
  lhs W(a, [a*msqrt(q)/sc, -(a*msqrt(q)/sc), a/sc, -(a*q/sc), c/a, rho1, rho2,
            k*qpow(n), qpow(-n)], q, q)
  rhs poch(k*rho1/a, n)*poch(k*rho2/a, n)*poch(k/c, n)*poch(a*q, n) /
      (poch(a*q/rho1, n)*poch(a*q/rho2, n)*poch(k/a, n)*poch(c*q, n)) *
      phi([c^2/a^2, -(q*sc), rho1, rho2, k*qpow(n), qpow(-n)],
          [-sc, k*rho1/a, k*rho2/a, (c/k)*qpow(1-n), c*qpow(1+n)], q, q)
}

identity "eq3.13" {
  paper "Eq 3.13"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2
  bind a = q^2, k = q^5, rho1 = -1, rho2 = -q^(-1)
  bind a = q^4, k = q^7, rho1 = -1, rho2 = -q^(-1)
  let c = k*rho1*rho2/(a*q)
  constraint "base-q^2 series against base-q series; c needs a square coefficient"
  lhs W(a, [a^2/c^2, rho1, q*rho1, rho2, q*rho2, k*qpow(1+n), k*qpow(n),
            qpow(1-n), qpow(-n)], qpow(2), qpow(2))
  rhs poch(a*q, n)*poch(k/c, n)*poch(k*rho1/a, n)*poch(k*rho2/a, n) /
      (poch(c*q, n)*poch(k/a, n)*poch(a*q/rho1, n)*poch(a*q/rho2, n)) *
      W(c, [rho1, rho2, c*msqrt(q/a), -(c*msqrt(q/a)), a/c, k*qpow(n), qpow(-n)],
        q, -(c*q/a))
}

identity "eq3.14" {
  paper "Eq 3.14"
  lattice 2
  int n range 0..4
  mono a, k
  bind a = q, k = 4*q^3
  bind a = q^3, k = 4*q^4
  let sk = msqrt(k)
  lhs W(a, [a*msqrt(q)/sk, -(a*msqrt(q)/sk), a*q/sk, -(a*q/sk),
            a*q*msqrt(q)/sk, -(a*q*msqrt(q)/sk), a*q^2/sk, -(a*q^2/sk),
            k^2/(a^2*q^2), k*qpow(1+n), k*qpow(n), qpow(1-n), qpow(-n)],
        qpow(2), qpow(2))
  rhs poch(a*q, n)*poch(k^2/(q*a^2), n)/(poch(k, n)*poch(k/a, n)) *
      phi([a^2*q/k, msqrt(a^3*q^3)/k, -(msqrt(a^3*q^3)/k), k/(a*q), qpow(-n)],
          [msqrt(a*q), -(msqrt(a*q)), a^3*q^3/k^2, a^2*qpow(2-n)/k^2],
          q, -(a*q^2/k))
}
)__cat";
}

inline const char* section4() {
    return R"__cat(
# Polynomial analogs of the Rogers-Ramanujan identities, and the four
# transformations derived from the second and third seed pairs.

identity "eq4.1" {
  paper "Eq 4.1"
  lattice 1
  int N range 0..12
  lhs sum(i, 0, N, qpow(i^2) * qbin(N, i))
  rhs bsum(j, -(N+1), N+1, sign(j) * qpow(j*(5*j+1)/2) * qbin(2*N, N + 2*j))
}

identity "eq4.2" {
  paper "Eq 4.2"
  lattice 1
  int N range 0..12
  lhs sum(i, 0, N, qpow(i^2 + i) * qbin(N, i))
  rhs bsum(j, -(N+2), N+1, sign(j) * qpow(j*(5*j+3)/2) * qbin(2*N+2, N+2*j+2)) /
      (1 - qpow(N+1))
}

identity "eq4.4" {
  paper "Eq 4.4"
  lattice 1
  mono a, k
  bind a = q, k = q^3
  bind a = q^2, k = q^4
  constraint "k^2/(q*a^2) and k/a need positive exponents for convergence"
  mode truncated 40
  lhs zsum(j, 0, 4, delta(j) * mpow(k^2/(q*a^2), j))
  rhs pochinf(k)*pochinf(k/a)/(pochinf(a*q)*pochinf(k^2/(q*a^2))) *
      zsum(j, 0, T, poch(q*a^2/k, 2*j)/poch(k, 2*j) * mpow(k/a, j) *
           poch(a, j)*(1 - a*qpow(2*j))*poch(k/(q*a), j) /
           (poch(q, j)*(1 - a)*poch(q^2*a^2/k, j)))
}

identity "eq4.9" {
  paper "Eq 4.9"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2
  bind a = q^2, k = q^7, rho1 = -q, rho2 = -2
  bind a = q^2, k = q^5, rho1 = -q, rho2 = -3
  let c = k*rho1*rho2/(a*q)
  lhs W(c^2, [rho1^2, rho2^2, a^2*q^2/c^2, -(c^2/a), -(q*c^2/a), k^2*qpow(2*n),
              qpow(-2*n)], qpow(2), q*c^2/a^2)
  rhs poch(a^2*q^2/rho1^2, n, qpow(2))*poch(a^2*q^2/rho2^2, n, qpow(2)) *
      poch(c^2*q^2, n, qpow(2))*poch(k^2/a^2, n, qpow(2)) /
      (poch(k^2*rho1^2/a^2, n, qpow(2))*poch(k^2*rho2^2/a^2, n, qpow(2)) *
       poch(a^2*q^2, n, qpow(2))*poch(k^2/c^2, n, qpow(2))) *
      W(a, [rho1, -rho1, rho2, -rho2, q*a^2/c^2, k*qpow(n), -(k*qpow(n)),
            qpow(-n), -(qpow(-n))], q, q)
}

identity "eq4.10" {
  paper "Eq 4.10"
  lattice 2
  int n range 0..4
  mono a, k
  bind a = q^3, k = q^4
  bind a = q^3, k = -q^5
  let sa = msqrt(a)
  lhs bibasic([a, q*sa, -(q*sa), k^2/(q*a^2)], [sa, -sa, a^3*q^2/k^2], q,
              [qpow(-2*n), k^2*qpow(2*n), q*a^2/k, -(q*a^2/k), q^2*a^2/k, -(q^2*a^2/k)],
              [a^2*qpow(2-2*n)/k^2, a^2*qpow(2+2*n), k, -k, k*q, -(k*q)], qpow(2), q)
  rhs poch(a^2*q^2, n, qpow(2))*poch(k^4/(q^2*a^4), n, qpow(2)) /
      (poch(k^2, n, qpow(2))*poch(k^2/a^2, n, qpow(2))) *
      phi([a^4*q^2/k^2, k^2/a^2, -(a^3*q^2/k^2), -(a^3*q^3/k^2), qpow(-2*n)],
          [a^6*q^4/k^4, -(a*q), -(a*q^2), a^4*qpow(4-2*n)/k^4], qpow(2), a^2*q^3/k^2)
}

identity "eq4.11" {
  paper "Eq 4.11"
  lattice 2
  int n range 0..4
  mono a, k, rho1, rho2
  bind a = q^2, k = q^7, rho1 = -q, rho2 = -2
  bind a = q^2, k = q^5, rho1 = -q, rho2 = -3
  let c = k*rho1*rho2/(a*q)
  lhs W(c^2, [rho1^2, rho2^2, a^2/c^2, -(c^2*q/a), -(c^2*q^2/a), k^2*qpow(2*n),
              qpow(-2*n)], qpow(2), c^2*q/a^2)
  rhs poch(a^2*q^2/rho1^2, n, qpow(2))*poch(a^2*q^2/rho2^2, n, qpow(2)) *
      poch(c^2*q^2, n, qpow(2))*poch(k^2/a^2, n, qpow(2)) /
      (poch(k^2*rho1^2/a^2, n, qpow(2))*poch(k^2*rho2^2/a^2, n, qpow(2)) *
       poch(a^2*q^2, n, qpow(2))*poch(k^2/c^2, n, qpow(2))) *
      bibasic([a, a^2/c^2], [c^2*q/a], q,
              [rho1^2, rho2^2, a*q^2, -(a*q^2), k^2*qpow(2*n), qpow(-2*n)],
              [a^2*q^2/rho1^2, a^2*q^2/rho2^2, a, -a, (a^2/k^2)*qpow(2-2*n),
               a^2*qpow(2+2*n)], qpow(2), q)
}

identity "eq4.12" {
  paper "Eq 4.12"
  lattice 2
  int n range 0..4
  mono a, k
  bind a = q^3, k = q^5
  bind a = q^4, k = q^6
  lhs bibasic([a, k^2/(a^2*q^2)], [a^3*q^3/k^2], q,
              [q^2*a, -(q^2*a), a^2*q/k, -(a^2*q/k), a^2*q^2/k, -(a^2*q^2/k),
               k^2*qpow(2*n), qpow(-2*n)],
              [a, -a, k, -k, q*k, -(q*k), a^2*qpow(2-2*n)/k^2, a^2*qpow(2+2*n)],
              qpow(2), q)
  rhs poch(k^4/(a^4*q^2), n, qpow(2))*poch(a^2*q^2, n, qpow(2)) /
      (poch(k^2, n, qpow(2))*poch(k^2/a^2, n, qpow(2))) *
      phi([a^4*q^2/k^2, k^2/(a^2*q^2), -(a^3*q^3/k^2), -(a^3*q^4/k^2), qpow(-2*n)],
          [a^6*q^6/k^4, -a, -(a*q), a^4*qpow(4-2*n)/k^4], qpow(2), a^2*q^3/k^2)
}
)__cat";
}

inline const char* section5() {
    return R"__cat(
# Doubly bounded polynomial identities.

identity "eq5.1" {
  paper "Eq 5.1"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(i^2)*qbin(N, i)*qbin(2*N+M-i, 2*N))
  rhs sum(j, -M, M, sign(j)*qpow(j*(5*j-1)/2)*qbin(N+M+j, N+2*j)*qbin(N+M-j, N-2*j))
}

identity "eq5.2" {
  paper "Eq 5.2"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M-1, qpow(i^2+i)*qbin(N, i)*qbin(2*N+M-i, 2*N+1))
  rhs sum(j, -M, M-1, sign(j)*qpow(j*(5*j+3)/2)*qbin(N+M+j, N+2*j+1)*qbin(N+M-j, N-2*j))
}

identity "eq5.3" {
  paper "Eq 5.3"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(i^2+i)*qbin(N, i)*qbin(2*N+M-i+2, 2*N+2))
  rhs sum(j, -M-1, M, sign(j)*qpow(j*(5*j+3)/2)*qbin(N+M+j+2, N+2*j+2)*qbin(N+M-j+1, N-2*j)) /
      (1 - qpow(N+1))
}

identity "eq5.4" {
  paper "Eq 5.4"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(i^2)*qbin(N, i, qpow(2))*qbin(2*N+M-i, 2*N))
  rhs sum(j, -M, M, sign(j)*qpow(2*j^2)*qbin(N+M-j, N-2*j)*qbin(N+M+j, N+2*j))
}

identity "eq5.5" {
  paper "Eq 5.5"
  lattice 1
  mode truncated 40
  lhs zsum(i, 0, isqrt(T)+1, qpow(i^2)/poch(q^2, i, q^2))
  rhs bsum(j, -(isqrt(T)+1), isqrt(T)+1, sign(j)*qpow(2*j^2))/pochinf(q)
}

identity "eq5.6" {
  paper "Eq 5.6"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(2*i^2)*qbin(2*N, 2*i)*qbin(2*N+M-i, 2*N, qpow(2)))
  rhs sum(j, -M, M, qpow(4*j^2-j)*qbin(N+M+j, N+2*j, qpow(2))*qbin(N+M-j, N-2*j, qpow(2)))
}

identity "eq5.7" {
  paper "Eq 5.7"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(N*i)*qbin(N, i)*qbin(2*N+M-i, 2*N))
  rhs sum(j, -M, M, sign(j)*qpow((3*j^2-j)/2)*qbin(N+M+j, N+2*j)*qbin(N+M-j, N-2*j))
}

identity "eq5.8" {
  paper "Eq 5.8"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, min(N, M), qpow(i^2)*qbin(2*N+M-i, 2*N)*qbin(N, i, qpow(2))^2/qbin(N, i)^2)
  rhs 2*sum(j, -min(M, floor(N/2)), min(M, floor(N/2)),
        sign(j)*qpow(j*(3*j+1)/2)/(1 + qpow(j)) *
        qbin(N+M+j, N)*qbin(N+M-j, N)*qbin(2*N, N+2*j)/qbin(2*N, N+j))
}

identity "eq5.9" {
  paper "Eq 5.9"
  lattice 1
  mode truncated 40
  lhs zsum(i, 0, isqrt(T)+1, qpow(i^2)/poch(-q, i)^2)
  rhs 2*bsum(j, -(isqrt(T)+1), isqrt(T)+1,
             sign(j)*qpow(j*(3*j+1)/2)/(1 + qpow(j)))/pochinf(q)
}

identity "eq5.10" {
  paper "Eq 5.10"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(i^2)*qbin(N, i)^2*qbin(2*N+M-i, 2*N))
  rhs qbin(N+M, N)^2
}

identity "eq5.11" {
  paper "Eq 5.11"
  lattice 1
  mode truncated 40
  lhs zsum(i, 0, isqrt(T)+1, qpow(i^2)/poch(q, i)^2)
  rhs 1/pochinf(q)
}

identity "eq5.12" {
  paper "Eq 5.12"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, min(N, M),
        qpow(2*i^2)*qbin(N, i, qpow(2))*qbin(2*N, 2*i, qpow(2))/qbin(2*N, 2*i) *
        qbin(N+i, N, qpow(2))/qbin(2*N, i, qpow(2))*qbin(2*N+M-i, 2*N, qpow(2)))
  rhs qbin(4*N, 2*N)/qbin(2*N, N, qpow(2)) *
      sum(j, -min(M, floor(N/2)), min(M, floor(N/2)),
          sign(j)*qpow(j*(7*j-1)/2)*qbin(N+M+j, N, qpow(2))*qbin(N+M-j, N, qpow(2)) *
          qbin(2*N, N-2*j, qpow(2))/qbin(4*N, 2*N-j))
}

identity "eq5.13" {
  paper "Eq 5.13"
  lattice 1
  mode truncated 40
  lhs zsum(i, 0, isqrt(T)+1, qpow(2*i^2)/(poch(q^2, i, q^2)*poch(-q, 2*i)))
  rhs bsum(j, -(isqrt(T)+1), isqrt(T)+1, sign(j)*qpow(j*(7*j-1)/2))/pochinf(q^2, q^2)
}
)__cat";
}

inline const char* section6() {
    return R"__cat(
# The delta-extended summation and its companion transformation.

identity "eq6.1" {
  paper "Eq 6.1"
  lattice 2
  int n range 0..5
  mono a, k, del
  bind a = q, k = 4*q^3, del = 2
  bind a = q^3, k = 4*q^5, del = -1
  let sk = msqrt(k)
  constraint "del must avoid small powers of q; k needs a square coefficient"
  lhs W(a, [a*msqrt(q)/sk, -(a*msqrt(q)/sk), a*q/sk, -(a*q/sk), k/a, k/(a*del),
            a*del, k*qpow(n), qpow(-n)], q, a*q/k)
  rhs poch(a*q, n)*poch(k/(a*del), n)/(poch(k, n)*poch(q/del, n)) *
      phi([k/a, a*del, qpow(-n), del*qpow(-n)],
          [del*a^2*q/k, (a/k)*qpow(1-n), del*(a/k)*qpow(1-n)], q, (a*q/k)^2)
}

identity "eq6.4" {
  paper "Eq 6.4"
  lattice 2
  int n range 0..4
  mono a, k, del
  bind a = q, k = 4*q^3, del = 2
  bind a = q^3, k = 4*q^5, del = -1
  let sk = msqrt(k)
  lhs W(a, [a*msqrt(q)/sk, -(a*msqrt(q)/sk), a*q/sk, -(a*q/sk), k/a, k/(a*del),
            a*del, k*qpow(n), qpow(-n)], q, a*q/k)
  rhs poch(a*q, n)*poch(k^2/(q*a^2), n)/(poch(k, n)*poch(k/a, n)) *
      sum(j, 0, n,
          poch(qpow(-n), j)*poch(a*q/k, j)*poch(a*q/(k*del), j) /
          (poch(q, j)*poch(q/del, j)*poch(a^2*qpow(2-n)/k^2, j)) * qpow(j) *
          phi([qpow(-j), del*qpow(-j), k/a, a*del],
              [del*a^2*q/k, (k/a)*qpow(-j), del*(k/a)*qpow(-j)], q, q))
}
)__cat";
}

inline const char* section7() {
    return R"__cat(
# Doubly bounded identities driven by the binomial kernel Q.

identity "eq7.7" {
  paper "Eq 7.7"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sign(N)*qbin(N+M, N, qpow(2))
  rhs bsum(j, -(N+1), N+1, sign(j)*Q(N, M, j, 0))
}

identity "eq7.11" {
  paper "Eq 7.11"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs qbin(N+M, N, qpow(2))
  rhs sum(j, -M, M, sign(j)*qpow(j^2)*Q(N, M, j, j))
}

identity "eq7.12" {
  paper "Eq 7.12"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs sign(N)*qpow(binom2(N+1) + N*M)*qbin(N+M, N)
  rhs bsum(j, -(N+1), N+1, sign(j)*qpow(binom2(j))*Q(N, M, j, 0))
}

identity "eq7.15" {
  paper "Eq 7.15"
  lattice 1
  int N range 0..6
  int M range 0..6
  lhs qbin(N+M, N)
  rhs sum(j, -M, M, sign(j)*qpow(j*(3*j+1)/2)*Q(N, M, j, j))
}

identity "eq7.16" {
  paper "Eq 7.16"
  lattice 2
  int N range 0..6
  int M range 0..6
  lhs qpow(-(N/2))*qbin(2*N+2*M+1, 2*N, msqrt(q))
  rhs bsum(j, -(N+1), N+1, qpow(j/2)*Q(N, M, j, 0))
}

identity "eq7.19" {
  paper "Eq 7.19"
  lattice 2
  int N range 0..6
  int M range 0..6
  lhs qbin(2*N+2*M+1, 2*N, msqrt(q))
  rhs sum(i, 0, 2*N, qpow(i/2)*qbin(i+M, i)*qbin(M+2*N-i, M))
}

identity "eq7.19_M20" {
  paper "Eq 7.19 -> Eq 7.20"
  lattice 2
  mode truncated 20
  int N range 0..6
  lhs poch(q, 2*N)*qbin(2*N+41, 2*N, msqrt(q))
  rhs poch(-msqrt(q), 2*N, msqrt(q))
}

identity "eq7.19_N20" {
  paper "Eq 7.19 -> Eq 7.21"
  lattice 2
  mode truncated 20
  int M range 0..6
  lhs poch(q, M)*qbin(41+2*M, 40, msqrt(q))
  rhs 1/poch(msqrt(q), 1+M, q)
}

identity "eq7.20" {
  paper "Eq 7.20"
  lattice 2
  int N range 0..8
  lhs poch(-msqrt(q), 2*N, msqrt(q))
  rhs sum(i, 0, 2*N, qpow(i/2)*qbin(2*N, i))
}

identity "eq7.21" {
  paper "Eq 7.21"
  lattice 2
  mode truncated 40
  int M range 0..6
  lhs 1/poch(msqrt(q), 1+M, q)
  rhs zsum(i, 0, 2*T, qpow(i/2)*qbin(i+M, i))
}

identity "eq7.22" {
  paper "Eq 7.22"
  lattice 2
  int N range 0..6
  int M range 0..6
  lhs qbin(2*N+2*M, 2*N, msqrt(q))
  rhs sum(j, -M, M, qpow(j^2 + j/2)*Q(N, M, j, j))
}

identity "eq7.23" {
  paper "Eq 7.23"
  lattice 2
  int N range 0..6
  int M range 0..6
  lhs sum(i, 0, M, qpow(i^2)*qbin(2*N+M-i, 2*N)*qbin(2*N, 2*i, msqrt(q)))
  rhs sum(j, -M, M, qpow(2*j^2 + j/2)*Q(N, M, 2*j, j))
}

identity "eq7.24" {
  paper "Eq 7.24"
  lattice 2
  int nu in {1,2,3}
  int N range 0..4
  int M range 0..4
  constraint "the multisum runs over tuples with sum of weighted parts at most N"
  lhs nestsum(n, d, 1, nu, 0, floor((N - isum(l, 1, d-1, l*n[l]))/d),
        qpow(isum(l, 1, nu, isum(t, l, nu, n[t])^2)) *
        qbin(2*N+M-isum(t, 1, nu, n[t]), M-isum(t, 1, nu, n[t])) *
        prod(i, 1, nu,
             qbin((1+delta(i-nu))*n[i] + 2*N - 2*isum(l, 1, i, isum(t, l, nu, n[t])),
                  (1+delta(i-nu))*n[i], qpow((2-delta(i-nu))/2))))
  rhs sum(j, -M, M, qpow((nu+1)*j^2 + j/2)*Q(N, M, (nu+1)*j, j))
}

identity "eq7.26" {
  paper "Eq 7.26"
  lattice 1
  mode truncated 40
  int nu in {2,3}
  lhs nestsum(n, d, 1, nu-1, 0, isqrt(T)+1,
        qpow(2*isum(l, 1, nu-1, isum(t, l, nu-1, n[t])^2)) /
        (prod(i, 1, nu-2, poch(q^2, n[i], q^2)) * poch(q, 2*n[nu-1])))
  rhs pochinf(qpow(8*nu), qpow(8*nu))*pochinf(qpow(4*nu), qpow(8*nu)) *
      pochinf(qpow(4*nu-2), qpow(8*nu))*pochinf(qpow(4*nu+2), qpow(8*nu)) /
      (pochinf(qpow(2*nu-1), qpow(4*nu))*pochinf(qpow(2*nu+1), qpow(4*nu)) *
       pochinf(q^2, q^2))
}
)__cat";
}

inline const char* section8() {
    return R"__cat(
# The self-dual chain identity.

identity "eq8.3" {
  paper "Eq 8.3"
  lattice 2
  int nu in {1,2,3}
  int N range 0..4
  int M range 0..4
  constraint "boundary values: m[0] = N and m[nu+1] = m[nu-1] (= N when nu = 1)"
  lhs nestsum(m, d, 1, nu, 0, M,
        qpow(2*isum(i, 1, nu-1, m[i]^2) + m[nu]^2 - 2*isum(i, 1, nu-1, m[i]*m[i+1])) *
        qbin(2*N+M-m[1], M-m[1]) *
        prod(i, 1, nu,
             qbin(ifz(i-1, N, m[i-1]) + ifz(i-nu, ifz(nu-1, N, m[nu-1]), m[i+1]),
                  2*m[i], qpow((2-delta(i-nu))/2))))
  rhs sum(j, -floor(M/nu), floor(M/nu),
          qpow(nu*(nu+1)*j^2 + j/2)*Q(N, M, (nu+1)*j, nu*j))
}
)__cat";
}

}  // namespace wpb::corpus_text
