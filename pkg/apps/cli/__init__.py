"""命令行入口：每个计算与校验都是一个可复现的管理命令。"""
