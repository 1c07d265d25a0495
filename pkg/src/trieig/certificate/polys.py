"""Transcribed inequality data for the four-area proof replay.

Every displayed polynomial of the published four-area argument is transcribed
here once, with exact rational coefficients, and nowhere else.  Each object
carries the printed reference values ("anchors") used to detect transcription
drift.  The replay verifiers never re-derive these from the Rayleigh
coefficient formulas except through explicit, certified identity checks.

Conventions:
    p, q      moduli coordinates of the apex
    alpha     the trial-space mixing parameter (all objectives are quadratics
              in alpha: a2*alpha^2 + a1*alpha + a0 <= 0 is the claim)
    w         stands for sqrt(p (1 - p)) on the circular arc
    s         stands for sqrt(1 - 4 q^2) on the arc in Area I
    x         stands for q^(1/3) in Area IV
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..rigor import Cbrt, Const, Expr, PI2, PI4, Sqrt, Var, as_expr, subs
from ..rigor.expr import Div

P = Var("p")
Q = Var("q")
ALPHA = Var("alpha")
W = Var("w")
S = Var("s")
X = Var("x")

F = Fraction


@dataclass(frozen=True)
class AlphaQuadratic:
    """Quadratic in alpha with coefficients that are expressions in (p, q)."""

    a2: Expr
    a1: Expr
    a0: Expr

    def __post_init__(self):
        object.__setattr__(self, "a2", as_expr(self.a2))
        object.__setattr__(self, "a1", as_expr(self.a1))
        object.__setattr__(self, "a0", as_expr(self.a0))

    def subs(self, mapping: dict) -> "AlphaQuadratic":
        return AlphaQuadratic(subs(self.a2, mapping), subs(self.a1, mapping),
                              subs(self.a0, mapping))

    def disc(self) -> Expr:
        return self.a1**2 - 4 * self.a2 * self.a0

    def as_expr(self) -> Expr:
        return self.a2 * ALPHA**2 + self.a1 * ALPHA + self.a0


# ---------------------------------------------------------------- Area I --

# cleared form of: 45-family pencil quotient <= (7/3) pi^2 (1 + 1/q)^2
OBJ45 = AlphaQuadratic(
    a2=(-44800 * ((-1 + P) * P + Q**2) - 7350 * PI2 * (1 + Q)**2
        + 7875 * PI2 * (1 + 2 * (-1 + P) * P + 2 * Q**2)),
    a1=256 * (288 - 576 * P),
    a0=(-7350 * PI2 * (1 + Q)**2
        + 2 * 7875 * PI2 * (1 + 2 * (-1 + P) * P + 2 * Q**2)),
)

# printed leading coefficients of the objective in p and in q
LEAD45_P = AlphaQuadratic(a2=15750 * PI2 - as_expr(44800), a1=0, a0=31500 * PI2)
LEAD45_Q = AlphaQuadratic(a2=350 * (24 * PI2 - 128), a1=0, a0=350 * 69 * PI2)

# printed corner quadratics
CORNER45_A = AlphaQuadratic(              # at (1/2, 39/250)
    a2=F(7, 1250) * (1805312 - 3 * 327457 * PI2),
    a1=0,
    a0=F(7, 1250) * (-3) * 70267 * PI2,
)
CORNER45_B = AlphaQuadratic(              # at (13/20, 39/250)
    a2=Div(128 * as_expr(355537) - 21 * 1225453 * PI2, as_expr(5000)),
    a1=F(128 * -864000, 5000),
    a0=Div(-21 * 112318 * PI2, as_expr(5000)),
)

# the objective on the arc p = (1 + s)/2, s = sqrt(1 - 4 q^2)
SEMICIRC45 = AlphaQuadratic(
    a2=-525 * PI2 * (-1 + 14 * Q * (2 + Q)),
    a1=-73728 * S,
    a0=-525 * PI2 * (-16 + 14 * Q * (2 + Q)),
)
SEMICIRC45_LEAD_PRINTED = -525 * PI2 * (-1 + 28 * Q + 14 * Q**2)

DISC45 = 72 * (-75497472 * (-1 + 4 * Q**2)
               - 30625 * PI4 * (-8 + 7 * Q * (2 + Q)) * (-1 + 14 * Q * (2 + Q)))
DDISC45_PRINTED = (-864360000 * PI4 * Q**3 - 2593080000 * PI4 * Q**2
                   - 72 * (as_expr(603979776) + 16721250 * PI4) * Q
                   + 524790000 * PI4)

Q_ARC_LO = Div(Const("sqrt91"), as_expr(20))     # left endpoint of the Area I arc
Q_ARC_HI = F(1, 2)

AREA1_ANCHORS = {
    "area1_arc_lead_at_left": "-80521.9",
    "area1_ddisc_at_left": "-9.21588e10",
    "area1_disc_at_left": "-4.12237e8",
    "area1_corner_vertex_max": "-1722.58",
    "area1_corner_vertex_alpha": "-0.265233",
}

# --------------------------------------------------------------- Area II --

# cleared form of: 30-family pencil quotient <= (7/3) pi^2 (1 + 1/q)^2
BIG30 = AlphaQuadratic(
    a2=3 * (-256 * P * (-10486784 + 2546775 * PI2)
            + 28 * P**2 * (-54958211 + 15523200 * PI2)
            - 539 * (1594323 + 2854972 * Q**2)
            + 54331200 * PI2 * (3 + Q * (-6 + 5 * Q))),
    a1=3 * (-2790065250 + 6330777600 * P - 2610690600 * P**2
            - 2610690600 * Q**2),
    a0=3 * (-280600848 - 256 * P * (-4269056 + 4729725 * PI2)
            + 28 * P**2 * (-25669424 + 28828800 * PI2)
            - 718743872 * Q**2 + 7761600 * PI2 * (57 - 42 * Q + 83 * Q**2)),
)

LEAD30_P = AlphaQuadratic(                # printed leading coefficient in p
    a2=84 * (-7 * as_expr(7851173) + 7 * 2217600 * PI2),
    a1=84 * (-7 * 13319850),
    a0=84 * (as_expr(-25669424) + 13 * 2217600 * PI2),
)
LEAD30_Q = AlphaQuadratic(                # printed leading coefficient in q
    a2=3 * (as_expr(-1538829908) + 35 * 7761600 * PI2),
    a1=3 * -2610690600,
    a0=3 * (as_expr(-718743872) + 83 * 7761600 * PI2),
)

# printed discriminant formulas for the two leading coefficients.  NOTE: the
# printed decimal approximations (-2.4e19 and -7.6e20) do not match these
# formulas, which evaluate to about -6.5648e20 and -1.7057e20; the sign claim
# is unaffected.  The printed decimals are recorded as non-gating anchors.
DISC30P_PRINTED = ((-7 * 84 * as_expr(13319850))**2
                   - 4 * 84**2 * (-7 * as_expr(7851173) + 7 * 2217600 * PI2)
                   * (as_expr(-25669424) + 13 * 2217600 * PI2))
DISC30Q_PRINTED = ((3 * as_expr(-2610690600))**2
                   - 4 * 3**2 * (as_expr(-718743872) + 7761600 * 83 * PI2)
                   * (as_expr(-1538829908) + 7761600 * 35 * PI2))

CORNER30 = AlphaQuadratic(                # at (13/20, 39/250)
    a2=Div(3 * (7 * as_expr(1768358569901) - 7761600 * 977515 * PI2),
           as_expr(62500)),
    a1=Div(3 * 7 * as_expr(1414193259450), as_expr(62500)),
    a0=Div(3 * (as_expr(6788089600688) - 7761600 * 312007 * PI2),
           as_expr(62500)),
)

# the segment q = 1.7 p - 1.38 and its p-range
SEG_Q = Div(85 * P - 69, as_expr(50))
SEG_P_LO = F(384, 425)
SEG_P_HI = Div(1423 + 10 * Const("sqrt1729"), as_expr(1945))

# printed coefficients of the objective on the segment (the middle, linear
# coefficient is reconstructed: the printed grouping is ambiguous, its sign
# here is fixed by the certified identity with the substituted objective)
LINEOBJ_LEAD_PRINTED = Div(
    1617 * (-4394582298 + 11485165390 * P - 6941150675 * P**2
            + 126000 * (10401 + 5 * P * (-4566 + 2245 * P)) * PI2),
    as_expr(625))
LINEOBJ_LIN_PRINTED = Div(
    -3150 * (4620157398 + 5 * P * (-2211921178 + 1208998385 * P)),
    as_expr(625))
LINEOBJ_CONST_PRINTED = Div(
    528 * (-5857161498 + 15856621390 * P - 9928670675 * P**2
           + 11025 * (682563 + 5 * P * (-308418 + 171935 * P)) * PI2),
    as_expr(625))

# the objective on the arc q = sqrt(p(1-p)); w stands for that square root
F_W = (-95482233 + 127309644 * P - 42257600 * P * PI2 + 18110400 * P**2 * PI2
       - 18110400 * (-1 + 2 * W) * PI2)
G_W = (-31177872 + 41570496 * P - 62955200 * P * PI2 + 18110400 * P**2 * PI2
       - 2587200 * (-19 + 14 * W) * PI2)
LIN30 = -310007250 + 413343000 * P
SEMICIRC30 = AlphaQuadratic(a2=27 * F_W, a1=27 * LIN30, a0=27 * G_W)

ARC_P_LO = F(13, 20)
ARC_P_HI = SEG_P_HI

# lower bounds for w = sqrt(p(1-p)) used on [p_lo, 0.83], and the surrogates
W_LOWER_FOR_G = -2 * (P - F(1, 2))**2 + F(1, 2)
W_LOWER_FOR_F = F(1, 2) - (P - F(1, 2))**2 - F(1, 50)
F0 = subs(F_W, {"w": W_LOWER_FOR_F})
G0 = subs(G_W, {"w": W_LOWER_FOR_G})
R_SURROGATE = 729 * LIN30**2 - 2916 * F0 * G0
R_CHECK_HI = F(83, 100)

RPPP_PRINTED = (-344307200786841600000 * PI4 * P
                - 241212414904592947200 * PI2
                + 253038466610012160000 * PI4)
RPP_LEAD_PRINTED = -172153600393420800000 * PI4
RPPP_ROOT_PRINTED = Div(-17301357 + 18149600 * PI2, 24696000 * PI2)

AREA2_ANCHORS = {
    "area2_disc30p": ("-2.4e19", False),        # printed decimal; misprint
    "area2_disc30q": ("-7.6e20", False),        # printed decimal; misprint
    "area2_corner_lead": "-3.00014e9",
    "area2_corner_disc": "-9.6317e18",
    "area2_segment_lead_at_lo": "-2.60188e9",
    "area2_segment_disc_dd_at_lo": "1.21487e21",
    "area2_segment_disc_at_lo": "-4.96593e17",
    "area2_segment_disc_at_hi": "-3.44375e17",
    "area2_arc_fprime_at_lo": "5.5e7",
    "area2_arc_f_at_hi": "-1.12135e8",
    "area2_arc_g_root": "0.81416",
    "area2_arc_disc_at_hi": "-3.4e17",
    "area2_r_ddd_root": "0.663938",
    "area2_r_dd_at_root": "1.32883e21",
    "area2_r_dd_at_lo": "1.32557e21",
    "area2_r_dd_at_hi": "8.66388e20",
    "area2_r_at_lo": "-4.39e18",
    "area2_r_at_hi": "-1.62e18",
}

# -------------------------------------------------------------- Area III --

# rectangle comparator f(q) = 3 pi^2 (1 + (4q^2)^(1/3))^3 / q and the angle
# comparator g(theta) = 7 theta j_{pi/theta}^2; pairs (q0, theta0) with
# f(q0) < g(theta0) cover the area
F_RECT = Div(3 * PI2 * (1 + Cbrt(4 * Q**2))**3, Q)

THETA_WINDOW = (F(3, 20), F(6, 25))      # [0.15, 0.24]
COMPARATOR_PAIRS = (
    (F(3, 20), F(1, 5), "0.9929"),
    (F(37, 200), F(9, 40), "0.9943"),
    (F(21, 100), F(6, 25), "0.9959"),
)

# the factored derivative of (1 + (4q^2)^(1/3))^3 / q, claimed form
F_RECT_CORE = Div((1 + Cbrt(4 * Q**2))**3, Q)
F_RECT_DERIV_FACTORED = Div((1 + Cbrt(4 * Q**2))**2, Q**2) * (Cbrt(4 * Q**2) - 1)

AREA3_BESSEL_ANCHORS = {
    "area3_j0": ("2.405", F(1, 1000)),
    "area3_j13_upper": "17.802",
    "area3_j13_minus_j12": "1.10",
}

# -------------------------------------------------------------- Area IV ---

# f(q) = 3 (1 + (4q^2)^(1/3))^3 - 7 (q + 1)^2 <= 0 on [0, 0.156]
F_AREA4 = 3 * (1 + Cbrt(4 * Q**2))**3 - 7 * (Q + 1)**2
Q_SPLIT = F(39, 250)
# derivative after substituting x = q^(1/3)
F_AREA4_DX_PRINTED = 6 * X * (3 * Const("cbrt4") - 7 * X
                              + 12 * Const("cbrt2") * X**2 + 5 * X**4)
X_UPPER_BOUND = Div(3 * Const("cbrt4"), as_expr(7))   # 3*2^(2/3)/7

AREA4_ANCHORS = {
    "area4_f_at_split": "-0.0177",
}

# region boundaries shared with `trieig.geometry`
P_SPLIT = F(13, 20)
