"""Reference values computed independently (mpmath at 40 digits, or scipy
dense grids) and frozen here. None of them is produced by fractal_calc."""

import math

GAMMA_RATIO_3_2P5 = 1.5045055561273501      # Γ(3)/Γ(2.5)
ML_HALF_AT_1 = 5.0089800807622835           # E_{1/2}(1) = e·erfc(-1)
SIN_HALF_AT_1 = 0.60715770584139373         # sin_{1/2}(1)
COS_HALF_AT_1 = 0.36787944117144232         # cos_{1/2}(1) = 1/e
EE_SECOND_COEFF_HALF = 2 + 4 / math.pi      # (E·E)_2 at α = 1/2
FTC_INTEGRAL_HALF = 2 / math.pi             # ∫_0^1 e_1 d(t^{1/2}) / Γ(3/2)
SEM_REAL_RESIDUAL_HALF = 10.647973254058373  # |E_{1/2}(1)^2 - E_{1/2}(√2)|
CIRCLE_RESIDUAL_0P9_THETA1 = -0.10546117752309155   # cos² + sin² - 1 at α=0.9, θ=1
SPHERE_RESIDUAL_0P8_11 = -0.35450905900889945       # α=0.8, (η, θ) = (1, 1), R = 1
POLAR_0P8_THETA = 0.66406097738084887       # α=0.8, z = 1 + i^α
POLAR_0P8_RESIDUAL = 0.0039937631713780428
POLAR_0P8_RESIDUAL_GRID = 0.003993763238887875  # raw 10^5-point grid minimum
PERIOD_0P9_P = 6.2525812144076151
PERIOD_0P9_RESIDUAL = 0.63378667941417647
HOELDER_HALF = 4.008980080762283            # 1000-point grid on [0, 1]
LAPLACE_INDICATOR_HALF = 0.73035382538700779
FOURIER_INDICATOR_HALF = complex(0.84270079294971487, -0.47074316223278915)
