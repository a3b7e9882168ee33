"""tradenet - trade network centrality studies

Builds normalized bilateral trade networks, computes degree, eigenvector and
random-walk centralities, and correlates them with weighted GDP.
"""

# Ensure library users don't get noisy logs without configuring logging
import logging as _logging

_logging.getLogger(__name__).addHandler(_logging.NullHandler())
