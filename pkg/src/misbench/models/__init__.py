from __future__ import annotations

from .bounds import (
    AdmissibleWitness as AdmissibleWitness,
    BoundValue as BoundValue,
    BoundsReport as BoundsReport,
    CurveRow as CurveRow,
    Eq3Result as Eq3Result,
    MonotonicityReport as MonotonicityReport,
    SolveReport as SolveReport,
    TailCheck as TailCheck,
    WitnessReport as WitnessReport,
)
from .extremal import (
    Degree2Report as Degree2Report,
    Degree2Row as Degree2Row,
    ExtremalReport as ExtremalReport,
    MibsScanReport as MibsScanReport,
    SearchReport as SearchReport,
    StoredRecord as StoredRecord,
    TightnessReport as TightnessReport,
    TightnessRow as TightnessRow,
)
from .mibs import (
    ComponentIdentityReport as ComponentIdentityReport,
    EnvelopeRow as EnvelopeRow,
    MibsCensus as MibsCensus,
    MibsRecord as MibsRecord,
)
from .mis import (
    BoundCheckReport as BoundCheckReport,
    BoundSlack as BoundSlack,
    BranchingStats as BranchingStats,
    MisFamily as MisFamily,
    SizeProfile as SizeProfile,
)
from .pipeline import (
    CaptureReport as CaptureReport,
    CellProbability as CellProbability,
    CellView as CellView,
    CensusReport as CensusReport,
    CorpusReport as CorpusReport,
    FamilyCheck as FamilyCheck,
    InequalityCheck as InequalityCheck,
    InstanceSummary as InstanceSummary,
    PipelineReport as PipelineReport,
    ProductBoundReport as ProductBoundReport,
)
