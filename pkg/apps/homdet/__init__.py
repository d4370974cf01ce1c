"""基于同态轮廓与双顶点构件的带权图同构判定。"""
