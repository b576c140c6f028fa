"""automata api."""

__all__ = ["Alphabet", "CENT", "DOLLAR", "END_MARKERS", "parse_word", "Machine", "iter_word_values", "evaluate_words",
           "MO1gQFA", "mo_accept_prob", "MM1gQFA", "TotalState", "mm_accept_prob", "MOLM", "molm_accept_prob",
           "BilinearMachine", "ProbabilisticAutomaton", "DFA", "blm_value", "pa_accept_prob", "dfa_accepts",
           "footnote_mm", "footnote_b_accepting_mm", "ab_star_dfa", "swap_pa", "uniform_pa"]

from .alphabet import Alphabet, CENT, DOLLAR, END_MARKERS, parse_word
from .machine import Machine, iter_word_values, evaluate_words
from .mo import MO1gQFA, mo_accept_prob
from .mm import MM1gQFA, TotalState, mm_accept_prob
from .molm import MOLM, molm_accept_prob
from .classical import BilinearMachine, ProbabilisticAutomaton, DFA, blm_value, pa_accept_prob, dfa_accepts
from .library import footnote_mm, footnote_b_accepting_mm, ab_star_dfa, swap_pa, uniform_pa
