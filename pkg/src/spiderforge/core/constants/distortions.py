"""Distortion constants – manifest spellings, intensity scales, and the legal accumulation table."""

DT_BLUR = "Blur"
DT_NOISE = "Noise"
DT_COMPRESSION = "Compression"
DT_PIXELATE = "Pixelate"
DT_CONTRAST_WEAKEN = "Contrast Weaken"
DT_SATURATE_WEAKEN = "Saturate Weaken"

DISTORTION_NAMES = [
    DT_BLUR,
    DT_NOISE,
    DT_COMPRESSION,
    DT_PIXELATE,
    DT_CONTRAST_WEAKEN,
    DT_SATURATE_WEAKEN,
]

LEVELS = (1, 2, 3, 4, 5)

# Index i holds the setting for level i + 1.
BLUR_SIGMAS = (0.75, 1.5, 2.5, 3.5, 5.0)
NOISE_SIGMAS = (4.0, 8.0, 16.0, 32.0, 48.0)
COMPRESSION_SCALES = (1, 2, 4, 8, 16)
PIXELATE_BLOCKS = (2, 4, 8, 16, 32)
CONTRAST_FACTORS = (0.8, 0.65, 0.5, 0.35, 0.2)
SATURATION_FACTORS = (0.8, 0.65, 0.5, 0.35, 0.2)

# Standard JPEG luminance quantization table, row-major.
JPEG_LUMA_TABLE = (
    (16, 11, 10, 16, 24, 40, 51, 61),
    (12, 12, 14, 19, 26, 58, 60, 55),
    (14, 13, 16, 24, 40, 57, 69, 56),
    (14, 17, 22, 29, 51, 87, 80, 62),
    (18, 22, 37, 56, 68, 109, 103, 77),
    (24, 35, 55, 64, 81, 104, 113, 92),
    (49, 64, 78, 87, 103, 121, 120, 101),
    (72, 92, 95, 98, 112, 100, 103, 99),
)

LEGAL_SECOND = {
    DT_BLUR: (DT_COMPRESSION, DT_NOISE),
    DT_COMPRESSION: (DT_BLUR, DT_NOISE),
    DT_CONTRAST_WEAKEN: (
        DT_NOISE,
        DT_BLUR,
        DT_COMPRESSION,
        DT_CONTRAST_WEAKEN,
        DT_PIXELATE,
        DT_SATURATE_WEAKEN,
    ),
    DT_PIXELATE: (DT_NOISE,),
    DT_SATURATE_WEAKEN: (DT_NOISE,),
}

SEVERITY_WORDS = {1: "slight", 2: "mild", 3: "moderate", 4: "severe", 5: "extreme"}

EFFECT_CLAUSES = {
    DT_BLUR: "softened edges and loss of fine detail",
    DT_NOISE: "grainy speckles scattered over smooth areas",
    DT_COMPRESSION: "blocky artifacts and ringing around edges",
    DT_PIXELATE: "coarse square blocks that erase texture",
    DT_CONTRAST_WEAKEN: "a washed-out look with flattened tones",
    DT_SATURATE_WEAKEN: "dull, faded colors",
}

# Keyword extraction for referring answers; matched case-insensitively on word boundaries.
DISTORTION_SYNONYMS = {
    DT_BLUR: ("blur", "blurry", "blurred", "blurring", "out of focus", "defocus"),
    DT_NOISE: ("noise", "noisy", "grain", "grainy", "speckle", "speckles"),
    DT_COMPRESSION: ("compression", "compressed", "jpeg", "blocky artifacts", "ringing"),
    DT_PIXELATE: ("pixelate", "pixelated", "pixelation", "mosaic"),
    DT_CONTRAST_WEAKEN: (
        "contrast weaken",
        "low contrast",
        "weak contrast",
        "reduced contrast",
        "washed-out",
        "washed out",
    ),
    DT_SATURATE_WEAKEN: (
        "saturate weaken",
        "saturation weaken",
        "desaturated",
        "desaturation",
        "low saturation",
        "faded colors",
    ),
}
