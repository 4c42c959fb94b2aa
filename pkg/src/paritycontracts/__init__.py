"""Permissive assume-guarantee templates for two-objective parity games.

Each player synthesizes an assumption/strategy template pair for its own
parity objective; the negotiation loop strengthens both objectives until
the pairs are compatible, after which winning strategies can be
extracted independently per player.
"""

from .csm import (CSM, ParityTempResult, TempResult, buchi_temp, cobuchi_temp,
                  parity_temp)
from .errors import (ConflictAt, EmptyGame, Exhausted, NonTermination,
                     NotClosed, ParityContractsError, ParseError, SizeCap,
                     UndefinedAt)
from .fixpoints import (attr, coop_buchi, coop_cobuchi, coop_parity,
                        coop_safety, cpre, epre, frontier, reach_exists,
                        zielonka)
from .graph import (GameGraph, PriorityFn, TwoObjectiveGame, buchi_to_parity,
                    cobuchi_to_parity, parse_game, restrict, serialize_game)
from .negotiation import (COMPATIBLE, CAP_REACHED, IterationRecord,
                          NegotiationOutcome, apply_spec_update,
                          incremental_add, negotiate)
from .templates import (CondLiveGroup, Lasso, LiveGroup, Strategy, Template,
                        check_template, conjoin, eval_parity, eval_template,
                        extract_strategy, run_profile)
from .verification import (ProfileReport, brute_coop_parity, brute_coop_two,
                           sample_winning_lassos, verify_profile_winning)

__version__ = "0.1.0"

__all__ = [
    "CSM", "ParityTempResult", "TempResult", "buchi_temp", "cobuchi_temp",
    "parity_temp", "ConflictAt", "EmptyGame", "Exhausted", "NonTermination",
    "NotClosed", "ParityContractsError", "ParseError", "SizeCap",
    "UndefinedAt", "attr", "coop_buchi", "coop_cobuchi", "coop_parity",
    "coop_safety", "cpre", "epre", "frontier", "reach_exists", "zielonka",
    "GameGraph", "PriorityFn", "TwoObjectiveGame", "buchi_to_parity",
    "cobuchi_to_parity", "parse_game", "restrict", "serialize_game",
    "COMPATIBLE", "CAP_REACHED", "IterationRecord", "NegotiationOutcome",
    "apply_spec_update", "incremental_add", "negotiate", "CondLiveGroup",
    "Lasso", "LiveGroup", "Strategy", "Template", "check_template", "conjoin",
    "eval_parity", "eval_template", "extract_strategy", "run_profile",
    "ProfileReport", "brute_coop_parity", "brute_coop_two",
    "sample_winning_lassos", "verify_profile_winning",
]
