from .helpers import AttributeMapper
from .exceptions import *
from .ballots import (Ballot, Profile, ProfileDomain, parse_profile, load_profile, restrict,
                      replicate, add_reversed_pair, permute_voters, permute_candidates, margin,
                      enumerate_profiles, count_profiles)
from .graphs import (MarginGraph, Cycle, margin_graph, majority_graph, qualitative_view,
                     simple_cycles, splitting_number, widest_path_strength, mcgarvey, to_dot)
from .methods import (DefeatRelation, registry, descriptor, defeat, split_cycle, global_choice,
                      local_choice, compare_resoluteness)
from .axioms import AxiomVerdict, check_axiom, check_axiom_on_profiles, check_axiom_on_pairs, replay
from .witnesses import WitnessCase, verify_witness
from .events import Events
from .engine import Engine
from .scripts import ScriptBase
