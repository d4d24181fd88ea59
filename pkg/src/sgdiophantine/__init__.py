"""Solution sets of (-1)^a p^x + (-1)^b (2^k (2p+1))^y = z^2 for Sophie Germain primes p."""

from .arith import is_perfect_square, isqrt, jacobi_symbol, legendre_symbol, mod_pow
from .primes import enumerate_sg, is_prime, is_sophie_germain, sg_density_stats, sg_residue_class
from .search import EquationSpec, SearchBounds, Solution, brute_force, evaluate, modular_obstruction
from .theorems import FamilyTag, classify, closed_form, cross_check, expand_family

__version__ = "0.1.0"
