"""Monogenicity and Galois groups of x^12 + a x^6 + b and its divisor-degree trinomials."""

from .characterize import Prediction, g2_monogenic_char, g4_monogenic_char, g6_monogenic_char, predict_f
from .galois import GaloisLabel, classify_f, classify_g4, classify_g6, frobenius_sample, statements
from .jks import MonogenicityReport, is_monogenic, jks_prime_ok, kkr_monogenic
from .kernels import BACKEND
from .trinomial import QuadraticLikeTrinomial, derive, discriminant, resolvent_reducible, tower

__all__ = [
    "BACKEND",
    "GaloisLabel",
    "MonogenicityReport",
    "Prediction",
    "QuadraticLikeTrinomial",
    "classify_f",
    "classify_g4",
    "classify_g6",
    "derive",
    "discriminant",
    "frobenius_sample",
    "g2_monogenic_char",
    "g4_monogenic_char",
    "g6_monogenic_char",
    "is_monogenic",
    "jks_prime_ok",
    "kkr_monogenic",
    "predict_f",
    "resolvent_reducible",
    "statements",
    "tower",
]
