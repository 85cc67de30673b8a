"""Decision variants of the Sleeping Beauty problem as finite games, in exact arithmetic."""

from .additivity import (
    AdditivityVerdict,
    Decomposition,
    Witness,
    check_additive,
    decompose,
    reconstruct,
    verify_witness,
)
from .analysis import (
    AnalysisReport,
    DutchBookVerdict,
    PropositionVerdict,
    analyze,
    brute_force_optimum,
    check_proposition,
    constructive_policy,
    dutch_book_verdict,
    ex_ante,
    sure_loss,
)
from .credence import CredenceProfile, credence_for, custom, halfer, nu, thirder
from .decision import (
    DecisionContext,
    Theory,
    action_values,
    best_response,
    cdt_value,
    edt_value,
    stable_policies,
)
from .errors import InvalidGame, ModelError, NotAdditive
from .game import (
    AwakeningEvent,
    Game,
    GameSpec,
    InformationSet,
    Policy,
    Realization,
    enumerate_policies,
    find_violations,
    parse_policy,
    uniform_policy,
    validate,
)
from .gamefile import dumps, load, loads
from .generator import GeneratorParams, random_game
from .library import BUILTINS, builtin, builtin_spec
from .montecarlo import MonteCarloResult, monte_carlo

__version__ = "0.1.0"
