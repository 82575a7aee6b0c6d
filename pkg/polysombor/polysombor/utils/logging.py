import functools
import logging as logmodule
import time

logging = logmodule.getLogger(__name__)

CAMPAIGN_GROUP = 'Function/polysombor/campaign'


def trace(f):
    """
    Report a verification campaign to New Relic as a function trace in the
    campaign group. Without the agent, the elapsed time is logged at DEBUG.
    """
    try:
        import newrelic.agent
        return newrelic.agent.function_trace(group=CAMPAIGN_GROUP)(f)
    except ImportError:
        pass

    @functools.wraps(f)
    def timed(*args, **kwargs):
        started = time.monotonic()
        try:
            return f(*args, **kwargs)
        finally:
            logging.debug("{} took {:.3f}s".format(f.__name__, time.monotonic() - started))
    return timed
