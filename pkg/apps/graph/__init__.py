"""图核心：加权目标图、k 标号图、量子图与有限目录。"""
