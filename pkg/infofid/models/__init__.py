"""
Models package for domain types.
"""
from infofid.models.state import PureState, HypersphericalAngles, SampleStream
from infofid.models.projector import RankProjector, OutcomeRecord
from infofid.models.report import AnalyticReport, MomentEstimate, VerificationRow
from infofid.models.run_config import RunConfig

__all__ = [
    'PureState',
    'HypersphericalAngles',
    'SampleStream',
    'RankProjector',
    'OutcomeRecord',
    'AnalyticReport',
    'MomentEstimate',
    'VerificationRow',
    'RunConfig',
]
