from .manager import Manager
from .partition import PartitionManager
from .symgroup import GroupManager
from .character import CharacterManager
from .spectrum import SpectrumManager
from .oracle import OracleManager
