from src.social_requests.generator import generate_skeletons, materialize, unit_cap
from src.social_requests.io import read_skeletons_csv, write_requests_csv, write_skeletons_csv
from src.social_requests.model import MaterializedRequest, Mode, RequestSkeleton

__all__ = [
    "MaterializedRequest",
    "Mode",
    "RequestSkeleton",
    "generate_skeletons",
    "materialize",
    "read_skeletons_csv",
    "unit_cap",
    "write_requests_csv",
    "write_skeletons_csv",
]
