"""Reference values for the unit tests, by direct evaluation at 50 digits.

Each value is computed from the defining closed form, written out here
independently of the C++ code. Run `python3 reference_values.py` to print
them; the numbers are frozen into the *_test.cpp files.
"""
from mpmath import mp, mpf, sqrt

mp.dps = 50


def abar(ah, al, mu):
    return mu * ah + (1 - mu) * al


def lam(ah, al, mu, phi):
    return phi / (2 * ah**2) * (sqrt((1 - mu) * al) + sqrt(mu * ah + (1 - mu) * al)) ** 2


def fp(p):
    return p / (sqrt(1 - p) - (1 - p))


def show(name, v):
    print(f"{name:48s} {mp.nstr(v, 17)}")


AH, AL, PHI = mpf("1.2"), mpf("0.5"), mpf(1)
show("expected_budget(1.2,0.5,0.5)", abar(AH, AL, mpf("0.5")))
show("type_threshold(1.2,0.5)", (AH - 2 * AL) / (AH - AL))
show("lambda(mu=1)", lam(AH, AL, 1, PHI))
show("lambda(mu=0)", lam(AH, AL, 0, PHI))
show("lambda(mu=0.5)", lam(AH, AL, mpf("0.5"), PHI))
show("posterior(0.5,0.4)", mpf("0.5") / (mpf("0.5") + mpf("0.4") * mpf("0.5")))
show("f_p(0.5)", fp(mpf("0.5")))
show("f_p(0.75)", fp(mpf("0.75")))
show("f_p(1e-8)", fp(mpf("1e-8")))

# Receiver investment, full regime.
show("B*(c=0.3,mu=0.8)", sqrt(abar(AH, AL, mpf("0.8")) * PHI / (2 * mpf("0.3"))))
show("B*(c=0.5,mu=0)", sqrt(abar(AH, AL, 0) * PHI / (2 * mpf("0.5"))))
show("interim(c=0.5,mu=0,low)", sqrt(mpf("0.5") * PHI * AL / 2))

# No-signal payoff.
c, p = mpf("0.5"), mpf("0.5")
show("pi_ns(p=0.5,c=0.5)", sqrt(c * PHI * abar(AH, AL, p) / 2))
al2, p2, c2 = mpf("0.06"), mpf("0.1"), mpf(2)
show("lambda(1.2,0.06,0.1)", lam(AH, al2, p2, PHI))
show("pi_ns(1.2,0.06,p=0.1,c=2)", p2 * PHI + sqrt(c2 * PHI * (1 - p2) * al2 / 2))

# Objective at q = 0.4 (receiver deterred after "high") and q = 0.
k = sqrt(c * PHI * AL / 2)
show("objective(q=0.4)", PHI * (p + (1 - p) * mpf("0.4")) + (1 - p) * (1 - mpf("0.4")) * k)
show("objective(q=0)", PHI * p + (1 - p) * k)
pi_ns = sqrt(c * PHI * abar(AH, AL, p) / 2)
show("improvement_pct", 100 * ((PHI * (p + (1 - p) * mpf("0.4")) + (1 - p) * mpf("0.6") * k) / pi_ns - 1))

# Near-doubling corner: c = phi/(2 a_high), p -> 1, full revelation.
p3, c3 = mpf("0.999"), PHI / (2 * AH)
pi_star = p3 * PHI + (1 - p3) * sqrt(c3 * PHI * AL / 2)
pi_ns3 = sqrt(c3 * PHI * abar(AH, AL, p3) / 2)
show("pi_star(p=0.999)", pi_star)
show("pi_ns(p=0.999)", pi_ns3)
show("ratio(p=0.999)", pi_star / pi_ns3)

# Case-3 lower cost bound.
f = mpf(3)
show("case3_lower_cost(f=3,al=0.06)", PHI / (2 * al2) * ((f - sqrt(f * f - f + 1)) / (f - 1)) ** 2)
show("case3_lower_cost(f=1,al=0.06)", PHI / (8 * al2))

# Complete-information payoff.
show("ci(1,2)", PHI * 1 / (2 * 2))
show("ci(3,2)", PHI * (1 - mpf(2) / (2 * 3)))

# Intermediate-cost benefit condition at a_high=1.2, a_low=0.2, p=0.2, c=0.45.
al4, p4, c4 = mpf("0.2"), mpf("0.2"), mpf("0.45")
k4 = sqrt(c4 * PHI * al4 / 2)
show("lambda(1.2,0.2,0.2)", lam(AH, al4, p4, PHI))
show("case2 lhs f_p(0.2)", fp(p4))
show("case2 rhs", (PHI - 2 * c4 * al4) / (2 * c4 * AH - PHI) * k4 / (PHI - k4))
show("lambda(1.2,0.2,0.1)", lam(AH, al4, mpf("0.1"), PHI))

# Where the same condition switches on along p at c = 0.46: f_p is
# 1 + 1/sqrt(1-p) and the right-hand side does not depend on p.
c5 = mpf("0.46")
k5 = sqrt(c5 * PHI * al4 / 2)
rhs5 = (PHI - 2 * c5 * al4) / (2 * c5 * AH - PHI) * k5 / (PHI - k5)
p5 = 1 - 1 / (rhs5 - 1) ** 2
show("case2 flip p at c=0.46", p5)
show("lambda(1.2,0.2,p_flip(0.46))", lam(AH, al4, p5, PHI))
