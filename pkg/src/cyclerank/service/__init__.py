from .app import create_app, serve
from .config import ServiceConfig
from .scheduler import Orchestrator, validate_queries
from .store import DataStore

__all__ = [
    "DataStore",
    "Orchestrator",
    "ServiceConfig",
    "create_app",
    "serve",
    "validate_queries",
]
