import logging
from abc import ABC, abstractmethod


class BaseAgent(ABC):
    """
    Abstract base class for all agents.
    Each agent owns one stage of the pipeline and returns a filled page.
    """

    def __init__(self, name):
        self.name = name
        self.capabilities = []
        self.logger = logging.getLogger(name)
        self.logger.debug("Initialized")

    @abstractmethod
    def process(self, input_data):
        """
        Process input and return output.
        Must be implemented by all agents.
        """

    def can_handle(self, task_type: str) -> bool:
        """Check if this agent can handle the task"""
        return task_type in self.capabilities

    def log(self, message):
        """Helper method for consistent logging"""
        self.logger.info(message)
