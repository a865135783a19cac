"""Placeholder semantic labels – the fixed noun list synthetic regions are named from."""

REGION_NOUNS = [
    "dog", "cat", "horse", "bird", "cow", "sheep", "car", "bus",
    "bicycle", "boat", "train", "truck", "tree", "flower", "grass", "sky",
    "cloud", "mountain", "river", "lake", "road", "building", "house", "window",
    "door", "fence", "bench", "lamp", "chair", "table", "sofa", "bed",
    "book", "bottle", "cup", "bowl", "plate", "vase", "clock", "sign",
    "person", "face", "hand", "shirt", "hat", "bag", "umbrella", "kite",
    "ball", "rock", "sand", "wave", "bridge", "tower", "wall", "roof",
    "leaf", "branch", "field", "pond", "statue", "fountain", "cake", "fruit",
]
