from __future__ import annotations

from .bounds import (
    ExactBound as ExactBound,
    corollary1 as corollary1,
    eppstein as eppstein,
    moon_moser as moon_moser,
    nielsen as nielsen,
)
from .codec import (
    parse_graph6 as parse_graph6,
    parse_graphs as parse_graphs,
    read_graphs as read_graphs,
    serialize_graph6 as serialize_graph6,
)
from .config import (
    Limits as Limits,
    RunConfig as RunConfig,
)
from .exception import (
    GraphFormatError as GraphFormatError,
    GuardViolation as GuardViolation,
    MisbenchException as MisbenchException,
    PreconditionViolation as PreconditionViolation,
    ProofClaimViolation as ProofClaimViolation,
)
from .extremal import (
    CanonicalGraph as CanonicalGraph,
    canonical_key as canonical_key,
    generate_all as generate_all,
    verify_theorem2 as verify_theorem2,
)
from .graph import (
    Graph as Graph,
    VertexSet as VertexSet,
)
from .mibs import enumerate_mibs_canonical as enumerate_mibs_canonical
from .mis import (
    enumerate_mis as enumerate_mis,
    mis_profile as mis_profile,
)
from .pipeline import run_pipeline as run_pipeline
