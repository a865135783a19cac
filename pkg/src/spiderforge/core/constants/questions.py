"""Question pools – every question the forge may emit, one list per task and answer setting."""

GLOBAL_DESC_POOL = [
    "Assess the quality of the image with a detailed explanation.",
    "Analyze the image quality and provide a thorough explanation.",
    "Examine the quality of the image with an in-depth discussion.",
    "Evaluate the quality of the image with a comprehensive analysis.",
    "Provide an evaluation of the image quality with a complete explanation.",
    "Appraise the quality of the image with a comprehensive overview.",
    "Deliver a thorough evaluation of the quality of the image, highlighting both strengths and weaknesses.",
    "Present an in-depth analysis of the quality of the image, addressing its advantages and areas needing improvement.",
    "Offer a detailed assessment of the image quality, encompassing both positive aspects and opportunities for enhancement.",
    "Conduct a comprehensive review of the quality of the image, noting strengths as well as potential improvements.",
    "Present a detailed analysis of the image quality, focusing on its strong points and areas that could be enhanced.",
    "Present a complete assessment of the image quality, addressing its advantages and identifying areas for improvement.",
    "Offer a thorough analysis of the image quality, mentioning both favorable aspects and areas to be enhanced.",
    "Present a holistic assessment of the quality of the image, detailing its strengths and areas that require enhancement.",
    "Conduct a detailed review of the quality of the image, focusing on both its strong features and areas that could benefit from refinement",
    "Deliver a comprehensive analysis of the quality of the image, concentrating on its merits and areas needing improvement",
    "Investigate the quality of the image while considering aspects that contribute to its degradation.",
    "Consider the factors affecting clarity as you assess the quality of the image.",
    "Analyze the quality of the image while examining factors that lead to its degradation.",
    "Investigate the image quality while evaluating the factors that result in its degradation.",
    "How do you assess the quality of the image, and what aspects contribute to your opinion?",
    "What are your thoughts on the quality of the image? Please elaborate on your perspective.",
    "How would you evaluate the quality of the image? Share a detailed explanation of your opinion.",
    "What is your perspective on the quality of the image? Expand on your evaluation.",
    "Can you deliver an in-depth evaluation of the quality of the image?",
    "Could you conduct a complete evaluation of the quality of the image?",
]

LOCAL_DESC_POOL = [
    "Conduct a detailed description about {} with particular attention to quality evaluation.",
    "Deliver a thorough description of {} with an emphasis on quality assessment.",
    "Offer a detailed analysis of {} with a focus on evaluating its quality.",
    "Supply a thorough analysis of {} emphasizing quality assessment.",
    "Conduct a detailed analysis of {} that prioritizes quality evaluation.",
    "Create a complete evaluation of {} with particular attention to quality.",
    "Conduct a thorough evaluation of {} that prioritizes quality insights.",
    "Provide a careful evaluation of {} with attention to quality assessment.",
    "Create a meticulous review of {} with a focus on its quality aspects.",
    "Write a thorough assessment of {} that underscores quality evaluation.",
    "Conduct a thorough analysis of {} that highlights quality assessment.",
    "Present an extensive evaluation of {} with a focus on the aspects of quality.",
    "Conduct an in-depth appraisal of {} that considers quality-related factors.",
    "Furnish a detailed evaluation of {} with insights on quality-related factors.",
    "Can you offer an in-depth description of {} that highlights quality evaluation?",
    "How would you characterize {} while focusing on quality evaluation?",
    "Could you provide a description of {} that highlights its quality aspects?",
]

HYBRID_MAX_POOL = [
    "which is the most degraded region in the evaluated image?",
    "Which region exhibits the highest impact from distortions among all the regions in the evaluated image?",
    "Which region shows the most severe degradation across all the regions in the evaluated image?",
    "Which region suffers the most degradation compared to the other regions in the evaluated image?",
    "Among all the regions in the evaluated image, which is the most significantly degraded one?",
    "Which region has the lowest quality among all the regions due to distortions in the evaluated image?",
    "Which region exhibits the lowest quality as a result of distortions in the evaluated image?",
    "What region shows the greatest decline in quality because of distortions in the evaluated image?",
    "Which region is marked by the poorest quality due to distortions in the examined image?",
    "Pinpoint the region with the worst distortion in the evaluated image.",
    "Determine the region that is most degraded in the evaluated image.",
    "Identify the region with the highest level of distortion in the evaluated image.",
]

HYBRID_MIN_POOL = [
    "which is the least degraded region in the evaluated image?",
    "Which region is least affected by distortions compared to others regions in the evaluated image?",
    "Which region has experienced the minimal level of degradation in the evaluated image?",
    "Which region exhibits the lowest degree of degradation compared to all the other regions in the evaluated image?",
    "Among all regions in the evaluated image, which one has the best quality with minimal distortion influence?",
    "What is the region with the highest quality and minimal distortion effects in the evaluated image?",
    "Which region has the highest quality with minimal impact from distortion in the evaluated image?",
    "In terms of quality, which region is the least affected by distortion in the evaluated image?",
    "Which region demonstrates the best quality in the evaluated image?",
    "Find the region that shows the least amount of degradation in the evaluated image.",
    "Determine the region that is least degraded in the evaluated image.",
    "Identify the region with the lowest level of distortion in the evaluated image.",
]

SINGLE_MAX_POOL = [
    "Which region shows the highest level of {} in the evaluated image?",
    "Which region shows the most severe {} in the evaluated image?",
    "What region has the highest amount of {} in the evaluated image?",
    "Which region experiences the highest degree of {} in the evaluated image?",
    "Which region has the greatest level of {} in the evaluated image?",
    "Pinpoint the region characterized by the highest level of {} in the evaluated image.",
    "Determine the region with the highest intensity of {} in the evaluated image.",
    "Which region has the most substantial {} effect in the evaluated image.",
]

SINGLE_MIN_POOL = [
    "What region exhibits the least amount of {} in the evaluated image?",
    "What is the region with the minimal level of {} in the evaluated image?",
    "Which region exhibits the lowest degree of {} in the evaluated image?",
    "Which region ranks the lowest in terms of {} in the evaluated image?",
    "Which region demonstrates the least extent of {} in the evaluated image?",
    "Identify the region that has the minimal {} in the evaluated image.",
    "Which region has the most negligible {} effect?",
    "Determine the region with the lowest intensity of {} in the evaluated image.",
]

ORDER_SEQUENCE_POOL = [
    "Which region follows the distortion addition sequence of {} and {} in the evaluated image?",
    "Which region add {} first, followed by {} in distortion addition process in the evaluated image?",
    "Identify the region that follows the {}-first, {}-second distortion addition pattern in the evaluated image.",
    "What region follows the pattern of adding {} before {} in the evaluated image?",
    "Determine the region that corresponds to the distortion addition order of {}, then {} in the evaluated image.",
    "Which region matches the pattern of distortion addition that begins with {} and ends with {} in the evaluated image?",
]

ORDER_FIRST_POOL = [
    "Which region begins the distortion addition process with {} in the evaluated image?",
    "Which region adds {} at the beginning of the distortion sequence in the evaluated image?",
    "Which region integrates {} first during the distortion addition process in the evaluated image?",
    "Identify the region that brings in {} first in the distortion addition process in the evaluated image.",
    "What region initiates the distortion sequence with the addition of {} in the evaluated image?",
    "Determine the region that includes {} first in the distortion addition process within the evaluated image.",
]

ORDER_LAST_POOL = [
    "Which region integrates {} last during the distortion addition process in the evaluated image?",
    "Which region incorporates {} as the last element in the distortion addition process in the evaluated image?",
    "What region of the evaluated image adds {} as the final step in the distortion sequence?",
    "Which region adds {} at the end of the distortion sequence in the evaluated image?",
    "What region finishes the distortion sequence by adding {} in the evaluated image?",
    "Determine the region that includes {} last in the distortion addition process within the evaluated image.",
]

REFER_SINGLE_SHORT_POOL = [
    "Identify the most critical one distortion of {}. Answer the question using short phrases.",
    "Pinpoint the foremost image quality issue in the evaluated image. Answer the question using short phrases.",
    "List the most significant distortion related to {}. Answer the question using short phrases.",
    "Can you list one primary distortion of {}? Answer the question using short phrases.",
    "What is the leading distortion of {}? Answer the question using short phrases.",
    "In terms of image quality, what is the most glaring issue of {}? Answer the question using short phrases.",
    "What is the most severe degradation of {}? Answer the question using short phrases.",
    "Pinpoint the foremost image quality issue(s) of {}. Answer the question using short phrases.",
    "What distortion(s) most detrimentally affect the overall quality of {}? Answer the question using short phrases.",
    "What distortion(s) are most prominent when examining {}? Answer the question using short phrases.",
    "What distortion(s) are most apparent of {}? Answer the question using short phrases.",
    "What distortion(s) stand out of {}? Answer the question using short phrases.",
    "Identify the most critical distortion(s) of {}. Answer the question using short phrases.",
    "Determine the leading degradation(s) of {}. Answer the question using short phrases.",
]

REFER_SINGLE_LONG_POOL = [
    "Identify the most critical distortion of {} and depict its effects.",
    "Pinpoint the foremost image quality issue in the evaluated image and elaborate on its effects.",
    "List the most significant distortion related to {} and describe its effects.",
    "Can you list one primary distortion of {} and detail its effects?",
    "What is the leading distortion of {}? Answer the question and describe its effects.",
    "In terms of image quality, what is the most glaring issue of {}? Answer the question and elaborate on its effects.",
    "What is the most severe degradation of {}? Answer the question and characterize its effects.",
    "Pinpoint the foremost image quality issue(s) of {} and describe its effects.",
    "What distortion(s) most detrimentally affect the overall quality of {}? Answer the question and elaborate on its effects.",
    "What distortion(s) are most prominent when examining {}? Answer the question and depict its effects.",
    "What distortion(s) are most apparent of {}? Answer the question and detail its effects.",
    "What distortion(s) stand out of {}? Answer the question and describe its effects.",
    "Identify the most critical distortion(s) of {} and elaborate on its effects.Identify the most critical distortion(s) of {} and elaborate on its effects.",
    "Determine the leading degradation(s) of {} and depict its effects.",
]

REFER_MULTI_SHORT_POOL = [
    "Identify two most critical distortions of {}. Answer the question using short phrases.",
    "Pinpoint two foremost image quality issues in the evaluated image. Answer the question using short phrases.",
    "List two most significant distortions related to {}. Answer the question using short phrases.",
    "Can you list two primary distortions of {}? Answer the question using short phrases.",
    "What are the two leading distortions of {}? Answer the question using short phrases.",
    "In terms of image quality, what are the two most glaring issues of {}? Answer the question using short phrases.",
    "What are the two most severe degradations of {}? Answer the question using short phrases.",
    "Pinpoint the foremost image quality issue(s) of {}. Answer the question using short phrases.",
    "What distortion(s) most detrimentally affect the overall quality of {}? Answer the question using short phrases.",
    "What distortion(s) are most prominent when examining {}? Answer the question using short phrases.",
    "What distortion(s) are most apparent of {}? Answer the question using short phrases.",
    "What distortion(s) stand out of {}? Answer the question using short phrases.",
    "Identify the most critical distortion(s) of {}. Answer the question using short phrases.",
    "Determine the leading degradation(s) of {}. Answer the question using short phrases.",
]

REFER_MULTI_LONG_POOL = [
    "Identify two most critical distortions of {} and describe their effects.",
    "Pinpoint two foremost image quality issues in the evaluated image and describe their effects.",
    "List two most significant distortions related to {} and describe their effects.",
    "Can you list two primary distortions of {}? Answer the question and characterize their effects.",
    "What are the two leading distortions of {}? Answer the question and explain their effects.",
    "In terms of image quality, what are the two most glaring issues of {}? Answer the question and elaborate on their effects.",
    "What are the two most severe degradations of {}? Answer the question and elaborate on their effects.",
    "Pinpoint the foremost image quality issue(s) of {} and depict their effects.",
    "What distortion(s) most detrimentally affect the overall quality of {}? Answer the question and detail their effects.",
    "What distortion(s) are most prominent when examining {}? Answer the question and describe their effects.",
    "What distortion(s) are most apparent of {}? Answer the question and depict their effects.",
    "What distortion(s) stand out of {}? Answer the question and describe their effects.",
    "Identify the most critical distortion(s) of {} and detail their effects.",
    "Determine the leading degradation(s) of {} and describe their effects.",
]

ALL_POOLS = {
    "global": GLOBAL_DESC_POOL,
    "local": LOCAL_DESC_POOL,
    "hybrid_max": HYBRID_MAX_POOL,
    "hybrid_min": HYBRID_MIN_POOL,
    "single_max": SINGLE_MAX_POOL,
    "single_min": SINGLE_MIN_POOL,
    "order_sequence": ORDER_SEQUENCE_POOL,
    "order_first": ORDER_FIRST_POOL,
    "order_last": ORDER_LAST_POOL,
    "refer_single_short": REFER_SINGLE_SHORT_POOL,
    "refer_single_long": REFER_SINGLE_LONG_POOL,
    "refer_multi_short": REFER_MULTI_SHORT_POOL,
    "refer_multi_long": REFER_MULTI_LONG_POOL,
}
