from pydantic import BaseModel


# 定义Config类
class Config(BaseModel):
    reciprocity_seed: int = 0
    """所有随机选择 (EDF 分裂多项式, 抽查点) 的种子"""
    reciprocity_spot_checks: int = 20
    """每份报告在支撑集之外抽查的局部块数量"""
    reciprocity_prime_bound: int = 1000
    """有理数域上证明不可约时尝试的最大素数"""
    reciprocity_max_workers: int = 1
    """单次检查内并行计算局部符号的线程数, 1 表示顺序计算"""
    reciprocity_spot_check_degree: int = 3
    """随机抽查点的最大次数"""
    reciprocity_log_level: str = "WARNING"
    """CLI 日志等级"""

    @property
    def seed(self) -> int:
        """随机种子"""
        return self.reciprocity_seed

    @property
    def spot_checks(self) -> int:
        """抽查数量"""
        return self.reciprocity_spot_checks

    @property
    def prime_bound(self) -> int:
        """证明不可约的素数上界"""
        return self.reciprocity_prime_bound

    @property
    def max_workers(self) -> int:
        """线程数"""
        return max(1, self.reciprocity_max_workers)

    @property
    def spot_check_degree(self) -> int:
        """抽查点的最大次数"""
        return max(1, self.reciprocity_spot_check_degree)

    @property
    def log_level(self) -> str:
        """日志等级"""
        return self.reciprocity_log_level.upper()


# 初始化配置实例
pconfig: Config = Config()
"""默认配置"""
