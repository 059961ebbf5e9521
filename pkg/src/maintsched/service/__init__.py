"""HTTP service wrapping the scheduling library.

schemas defines the transport models, handlers the transport-free request
processing (shared by the HTTP routes and the in-process CLI), and app the
FastAPI application.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
