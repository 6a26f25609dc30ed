"""Certificates for splitting topological Azumaya algebras as tensor products."""

from .arith import BezoutWitness, BrauerClass, NotCoprime, WrongPeriod, bezout_uv, crt_merge, ext_gcd, period
from .engine import DecompositionCertificate, DecompositionProblem, NotOrdered, Verdict, brauer_split, decide
from .fgab import FgabGroup, FgabMap, is_isomorphism, smith_normal_form
from .homotopy import OutOfStableRange, SpaceSpec, pi

__version__ = "0.1.0"
