"""Frozen reference values for the unequal-variance t-test.

Each entry is (xs, ys, t_ref, p_ref). The reference statistics were
computed independently with scipy.stats.ttest_ind(equal_var=False)
(scipy 1.15.3) and frozen here so the test needs no scipy at runtime.
"""

WELCH_FIXTURES = [
    ([1.0, 2.0, 3.0, 4.0, 5.0],
     [2.0, 3.0, 4.0, 5.0, 6.0],
     -1.0, 0.34659350708733416),
    ([1.0, 2.0, 3.0, 4.0, 5.0],
     [1.0, 2.0, 3.0, 4.0, 5.0],
     0.0, 1.0),
    ([9.435, 9.342, 9.989, 10.948, 9.81, 8.64, 9.795, 9.733, 10.21, 10.079, 10.014, 10.069, 9.465, 9.947, 10.578, 9.542, 9.795, 10.344, 9.836, 9.305],
     [1001.209, 998.626, 1000.201, 1000.344, 1000.385, 999.861, 999.067, 1000.193, 999.985, 1000.105, 1000.079, 999.455, 1000.512, 1000.425, 999.985, 1000.027, 1000.021, 999.578, 1000.206, 1000.752],
     -5874.385057514978, 3.458300811379643e-113),
    ([-1.0331, -0.6139, -0.3836, -2.069, -0.247],
     [-2.5863, 0.1779, -2.3926, 0.6757, 2.0121, 1.7556, -0.7792, 4.1131],
     -1.425234081839662, 0.18756664093781278),
    ([4.1396, 3.8351, 3.2837, 3.8426, 2.2742, 4.0744, 2.4949, 2.801, 3.27, 2.2704, 2.7084, 2.9712, 3.4636, 2.4396, 3.399, 2.158, 3.1023, 2.262, 2.6664, 2.6533, 3.2262, 2.7852, 5.2113, 3.7474, 2.5203, 3.4951, 6.1621, 5.371, 2.7362, 3.3951],
     [4.1617, 4.5352, 2.7566, 3.2842, 3.925, 2.4619, 2.8309, 1.828, 3.8326, 4.1619, 2.8748, 3.3797, 3.8648, 2.6081, 2.8686, 2.6338, 3.4676, 2.4623, 1.0123, 2.5888, 3.8501, 2.3789, 4.2381, 2.5769, 1.7294, 2.5693, 3.1272, 3.7296, 1.8296, 2.1183],
     1.2804786914566253, 0.20553583176383627),
    ([-2.0747, -1.9291, -2.0232, -2.12, -2.001, -2.0606, -1.9688, -2.0398, -2.0668, -1.8346, -2.0232, -2.0782],
     [5.0751, -7.8341, -5.7858, -8.0307, -2.2645, -2.5544, 1.9484, 4.9009, -7.7261, -1.7332, -0.1192, -2.7839, -4.3996, -8.7264, -3.9638, 10.8469, 2.7017, -3.7702, 3.1182, 0.1554, 6.225, 7.9138, 1.5151, -1.672, -10.1883, 4.4536, 0.8098, -5.7254, 2.4937, -3.1105, 4.0347, -1.6529, 1.5957, -1.8693, -4.8644, -3.4485, -0.4026, 3.1871, 0.708, -9.3766],
     -1.2919356682035077, 0.2039707062374137),
    ([151.7531, 121.4571, 74.6069, 76.0938, 125.0251, 69.5885, 136.8731],
     [89.0123, 90.6004, 90.0039, 89.6698, 90.3988, 88.8313, 87.6906],
     1.4468710070095419, 0.19799322515080725),
    ([-0.5296, 1.3148, 0.125, 0.3667, -1.4291, 0.549, 0.5671, -1.1045, -1.6435, 1.7672, -0.9051, 0.1884, 1.3146, -0.5305, -0.7187, 0.4666, 0.0694, -0.2527, -0.1526, 0.975, -0.5259, -0.2384, 0.5327, -0.335, 1.8241, -1.095, 0.944, 0.5582, 2.0318, -1.7345, 0.2505, 1.0381, -0.4697, 0.1072, 0.0637, 1.0796, -2.0002, -0.0596, 1.2329, -0.0413, -2.3253, -0.4743, 1.3318, 0.6657, 1.2864, -0.9136, 0.8212, -0.2061, 0.456, -0.219],
     [-0.547, -1.2878, -0.931, -1.1917, 0.0471, 0.354, -0.0604, -0.4528, -0.4059],
     2.462076298736153, 0.023660929843730368),
    ([0.001, 0.001, 0.001, 0.0011, 0.0011, 0.001, 0.0009, 0.0009, 0.0011, 0.001, 0.001, 0.001, 0.001, 0.0008, 0.0008],
     [0.0008, 0.001, 0.0008, 0.001, 0.0012, 0.0008, 0.0009, 0.0012, 0.0014, 0.0015, 0.0012, 0.0012, 0.0009, 0.0009, 0.0012, 0.0013, 0.0009, 0.0012, 0.0011, 0.0007, 0.0011],
     -1.546852660830685, 0.1326941062943789),
    ([5.5151, 6.4822, 6.9914, 4.6927, 5.3403, 8.7919, 8.5699, 4.9386, 6.7209, 4.1547],
     [7.1382, 8.956, 4.1171, 4.5429, 10.0666, 3.1739, 6.0026, 8.3489, 7.0467, 7.3226],
     -0.5250235038539152, 0.6066347135228635),
    ([7.4947, 7.4997, 7.4841, 7.495, 7.4998, 7.5024, 7.5093, 7.5006, 7.5159, 7.508, 7.4952, 7.5188, 7.5007, 7.4933, 7.5038, 7.5074, 7.4966, 7.5014, 7.5288, 7.5003, 7.5081, 7.4981, 7.5147, 7.4879, 7.4816],
     [4.7203, 8.2593, 6.2469, 4.8291, 3.2467, 3.9304, 13.2253, 7.7815, 14.596, 2.1882, 9.2274, 10.7643, 7.6863, 10.0596],
     -0.124898853850809, 0.9025143372122909),
    ([-55.7122, -48.5332, -47.9352, -48.8557, -53.6769, -36.5212],
     [52.8288, 53.8914, 57.6936, 66.9725, 60.5162, 49.4008, 52.637, 42.5162, 45.382, 44.0514, 42.5595, 20.8969, 45.7765, 58.3261, 40.9732, 34.8915, 61.3945, 40.2999, 32.9229, 58.926, 52.5555, 56.5662, 46.3854, 46.9938, 62.9006, 68.3294, 39.2687, 63.7447, 56.6775, 41.8805, 56.8741, 55.1898, 65.5193, 69.3627, 37.542, 46.4712, 37.3499, 49.4408, 51.0656, 45.624, 37.6229, 37.3052, 35.2862, 49.7647, 59.3802],
     -31.006360375812903, 1.9302902333502763e-10),
    ([1.1295, 0.7931, 0.6563, 0.2166, -0.0192, -0.1547, 1.0553, 0.5523, 1.1922, 0.9425, -0.9876, 0.4666, -0.7543, -0.1383, -0.424, 0.212, -0.2799, -0.825],
     [-1.0684, -0.7198, -0.0738, 0.2155, 1.8848, 1.3561, -0.0138, -0.6884, 0.8832, 0.4609, -0.1844, 0.0913, -0.8904, 0.7089, -0.0297, 0.2954, -0.3313, 1.3241],
     0.09105476883377142, 0.9279970767622057),
    ([9.3475, -2.3898, -0.7636, 9.1909, 3.0198, 4.2818, 7.9995, 0.6687, -7.8005],
     [2.3598, 1.9925, 2.3195, 1.8426, 2.2519, 2.0394, 2.4255, 1.6358, 1.8747, 1.8865, 2.2396, 1.6679, 2.1794, 1.8594, 1.9817, 2.2755, 1.8755, 2.0216, 2.2504, 2.0109, 1.9111, 1.8056, 1.9139, 1.8, 1.9291, 2.3535, 2.2075, 1.8407, 1.7445, 2.2016, 1.9072, 1.8633, 2.0283],
     0.3113066621251474, 0.7635193754985155),
    ([0.4308, 1.7759, -0.003, 1.8573, 0.1115, 0.9381, 0.1366, 1.667, 0.6256, 1.2354, 1.1202, -0.0094, 0.859, 1.3232, 1.7613, -0.603, 0.4343, 1.6553, 1.8878, 1.952, 1.5004, 1.6181, 0.6729, 0.5686, 0.874, 1.2836, 1.7214, 1.6976, 0.2654, 0.5207, 1.4362, 1.557, 1.1618, 0.5027, 0.5972, 1.5401, 0.8891, 2.2609, 0.5827, 2.1046],
     [1.4052, 1.7593, 2.1096, 0.9692, 1.5924],
     -2.3114294499102925, 0.0540460433110893),
    ([-4.375, -0.7675, 3.462, 4.424, -1.5408, -3.0692, -5.4688, 6.3377, -5.5051, 0.445, -0.5858, -2.0164, -0.0623, 3.918, -1.9783, -1.4586, -1.925, 3.4302, -2.8765, -4.5436, -3.823, 6.9381],
     [-0.4468, -0.3194, -0.4813, -0.4333, -0.4527, -0.0821, -0.6376, -0.458, -0.4614, -0.6451, 0.2128, -0.4237, -0.1727, -0.6177, -0.3196, -0.2491, 0.0929, -0.7791, -0.569, -0.6378, -0.5443, -0.6394, -0.6733, -0.1241, -0.4485, -0.3271, -0.7445, -0.4277],
     -0.10073476460310309, 0.9207103859950205),
    ([7.6754, 8.5366, 7.308, 7.8623, 7.6599, 7.5402, 8.5051, 7.2922, 7.4058, 8.4154, 8.0026, 8.8694, 8.0486],
     [7.9702, 8.0575, 8.1017, 7.9994, 8.0054, 8.105, 8.0558, 7.9957, 8.0392, 7.9788, 8.0211, 8.0662, 8.0745],
     -0.7219539828006721, 0.4839526852532122),
    ([1.4057, -2.8886, -4.4456, -0.4354, -0.3964, 2.5945, -2.1335, -2.0264, -2.9702, -2.6125, -1.6767, -1.8152, -0.6666, 0.1283, -0.2318, -2.1027, 2.8781, 1.7687, -3.6153, -0.603, 0.2313, -0.7319, -1.7602, -0.9027, -3.9425, 0.4723, -1.341, -3.1677, -1.231, -3.866, -6.1856, 0.6422, 0.2501, -0.0136, -1.0078],
     [0.9639, -1.018, -0.6702, -3.2631, 0.4912, 0.8664, 1.1313, -1.98, -0.885, -3.6394, 1.6124],
     -0.990243153958487, 0.3348984465203163),
    ([5.5381, 4.9094, 4.659, 3.928, 3.3767, 3.605, 3.0725, 5.7301, 2.6283, 3.2386, 5.3731, 3.5429, 4.5805, 2.9351, 3.5236, 5.985],
     [3.2254, 4.8151, 4.8452, 3.9554, 2.7431, 4.1585, 2.885, 5.1209, 3.6168, 3.6904, 4.403, 5.4768, 4.2325, 2.6887, 3.1502, 4.587, 3.7884, 4.1982, 4.1507, 2.5092, 3.3775, 3.3069, 4.237, 2.883],
     1.0300452883052602, 0.31248117474607845),
    ([0.01, 0.0187, -0.0075, 0.0471, 0.0095, -0.0033, -0.0142, 0.0052],
     [-0.0016, -0.0255, 0.003, 0.0024, 0.0007, -0.0274, 0.0061, -0.0303],
     1.9854784188308277, 0.06776699038480911),
]
