// Captured responses of the design service for the worked oncology
// example; regenerate by re-running the capture described in the README.

export const lungFixtures = {
 "design": {
  "p0_e1": 0.59,
  "p0_e2": 0.74,
  "hr_e1": 0.91,
  "hr_e2": 0.77,
  "rho": 0.5,
  "beta_e1": 1,
  "beta_e2": 2,
  "case": 3,
  "copula": "frank",
  "rho_type": "spearman",
  "followup_time": 1.0
 },
 "effectsize": {
  "gahr": 0.7989221048585101,
  "ahr": 0.7990158632914438,
  "rmst_ratio": 1.127028353285066,
  "median_ratio": 1.1323093541606786,
  "control": {
   "rmst": 0.3785628590340548,
   "median": 0.3541808144817275,
   "median_beyond_followup": false,
   "prob_e1": 0.59,
   "prob_e2": 0.74,
   "prob_ce": 0.9896070531357015
  },
  "treated": {
   "rmst": 0.4266510756320373,
   "median": 0.401042249301908,
   "median_beyond_followup": false,
   "prob_e1": 0.5557439921893121,
   "prob_e2": 0.7433085454729866,
   "prob_ce": 0.9711635822706046
  }
 },
 "samplesize": {
  "endpoint1": 6162,
  "endpoint2": 620,
  "composite": 636,
  "events_composite": 622.9692213764698,
  "gahr": 0.7989221048585101,
  "alpha": 0.05,
  "power": 0.8,
  "formula": "schoenfeld"
 },
 "are": {
  "are": 9.303230422981317,
  "noncentrality_relevant": -0.07244140745991243,
  "noncentrality_composite": -0.22095496682325455
 },
 "curves": {
  "survival": {
   "time": [
    0.0,
    0.02564102564102564,
    0.05128205128205128,
    0.07692307692307693,
    0.10256410256410256,
    0.1282051282051282,
    0.15384615384615385,
    0.1794871794871795,
    0.20512820512820512,
    0.23076923076923075,
    0.2564102564102564,
    0.28205128205128205,
    0.3076923076923077,
    0.3333333333333333,
    0.358974358974359,
    0.3846153846153846,
    0.41025641025641024,
    0.4358974358974359,
    0.4615384615384615,
    0.48717948717948717,
    0.5128205128205128,
    0.5384615384615384,
    0.5641025641025641,
    0.5897435897435898,
    0.6153846153846154,
    0.641025641025641,
    0.6666666666666666,
    0.6923076923076923,
    0.717948717948718,
    0.7435897435897436,
    0.7692307692307692,
    0.7948717948717948,
    0.8205128205128205,
    0.8461538461538461,
    0.8717948717948718,
    0.8974358974358974,
    0.923076923076923,
    0.9487179487179487,
    0.9743589743589743,
    1.0
   ],
   "control_e1": [
    1.0,
    0.9773978535420721,
    0.9553065641086499,
    0.9337145852344464,
    0.9126106314290741,
    0.8919836722784521,
    0.8718229266795342,
    0.852117857205344,
    0.8328581645973733,
    0.8140337823824625,
    0.795634871611353,
    0.7776518157161586,
    0.7600752154840685,
    0.7428958841446566,
    0.7261048425682272,
    0.7096933145726895,
    0.6936527223365053,
    0.6779746819153152,
    0.6626509988598982,
    0.6476736639331746,
    0.6330348489240143,
    0.6187269025556615,
    0.6047423464866384,
    0.5910738714020364,
    0.5777143331931531,
    0.5646567492234774,
    0.5518942946790709,
    0.5394202990014398,
    0.52722824240103,
    0.515311752449526,
    0.5036646007491704,
    0.49228069967736393,
    0.4811540992048449,
    0.4702789837857847,
    0.45964966931817286,
    0.4492606001729054,
    0.4391063462900209,
    0.42918160034056824,
    0.4194811749526229,
    0.41000000000000003
   ],
   "control_e2": [
    1.0,
    0.9971671054569448,
    0.9887164827019188,
    0.9747909579747639,
    0.9556241072244772,
    0.9315337389451267,
    0.9029131295916489,
    0.8702203492717951,
    0.833966082325144,
    0.7947003946451043,
    0.7529989253654826,
    0.7094489842532986,
    0.6646360184943342,
    0.6191308753456295,
    0.5734782331655683,
    0.5281865061927983,
    0.48371945221835877,
    0.4404896313066133,
    0.39885378225896423,
    0.35911010557968737,
    0.3214973707906703,
    0.2861957048758112,
    0.2533288694613647,
    0.2229677982720151,
    0.1951351438405147,
    0.16981057302809466,
    0.14693655361294644,
    0.12642438747968274,
    0.10816026787511149,
    0.09201116664915589,
    0.07783039017243633,
    0.06546267758129852,
    0.05474875019666079,
    0.04552925471290171,
    0.037648073700152,
    0.03095500410407411,
    0.025307827113057322,
    0.02057381068020758,
    0.01663069912036944,
    0.013367252782177113
   ],
   "control_ce": [
    1.0,
    0.9747832338546096,
    0.9456593481482818,
    0.9136437454333157,
    0.8795029887551056,
    0.8437886083785323,
    0.8068855018954466,
    0.769060978919212,
    0.7305080964430125,
    0.6913811578614439,
    0.6518231106315662,
    0.6119851909907537,
    0.5720393053685254,
    0.532183726480281,
    0.49264287201170714,
    0.45366221208182744,
    0.4154996236312455,
    0.3784146717978089,
    0.3426572874815125,
    0.30845712428432587,
    0.27601456506782523,
    0.24549398079190085,
    0.21701949085957745,
    0.19067318253872323,
    0.1664955387908155,
    0.14448769910171888,
    0.12461512362343814,
    0.10681222888604783,
    0.09098759567026171,
    0.0770294016408919,
    0.06481079224871264,
    0.05419496598206386,
    0.04503980979743942,
    0.03720197489148797,
    0.03054033053792779,
    0.024918773907863054,
    0.02020840649900299,
    0.016289113203692574,
    0.013050598553122954,
    0.010392946864298532
   ],
   "treated_e1": [
    1.0,
    0.9794109532764425,
    0.9592458153978698,
    0.9394958584852661,
    0.9201525343583241,
    0.9012074708356207,
    0.882652468110967,
    0.864479495204367,
    0.8466806864860469,
    0.8292483382720519,
    0.8121749054899362,
    0.795452998413103,
    0.7790753794623817,
    0.7630349600734574,
    0.7473247976287971,
    0.7319380924527447,
    0.7168681848684836,
    0.7021085523155944,
    0.6876528065269594,
    0.6734946907637904,
    0.6596280771075868,
    0.6460469638078483,
    0.632745472684396,
    0.6197178465831775,
    0.606958446884454,
    0.594461751062292,
    0.5822223502943028,
    0.5702349471205939,
    0.5584943531509226,
    0.5469954868190552,
    0.5357333711833626,
    0.5247031317726994,
    0.5138999944766344,
    0.5033192834791189,
    0.4929564192346999,
    0.48280691648639906,
    0.47286638232440387,
    0.46313051428472707,
    0.4535950984870136,
    0.4442560078106878
   ],
   "treated_e2": [
    1.0,
    0.9978179597355814,
    0.9913003652058981,
    0.9805321745549794,
    0.9656529347446065,
    0.9468537719705267,
    0.9243733062937952,
    0.8984926125526866,
    0.869529376267962,
    0.8378314142690434,
    0.8037697444603975,
    0.7677313971129621,
    0.7301121612003466,
    0.6913094537941014,
    0.65171548885261,
    0.6117109045935143,
    0.5716589869393183,
    0.5319006013275093,
    0.49274991762932363,
    0.45449098420767226,
    0.4173751784238664,
    0.3816195332585023,
    0.34740591410783545,
    0.3148809970610369,
    0.2841569806825444,
    0.25531294794854276,
    0.22839678374984687,
    0.20342754631547302,
    0.180398187895972,
    0.15927852078379992,
    0.1400183288251211,
    0.12255053148556008,
    0.10679431670300336,
    0.0926581695967586,
    0.08004273600910507,
    0.06884347226554043,
    0.05895304493694822,
    0.05026345632032986,
    0.04266788245265123,
    0.0360622204469227
   ],
   "treated_ce": [
    1.0,
    0.9773827456255013,
    0.9517084092943653,
    0.9237115552172666,
    0.8939674929730507,
    0.8629085946768885,
    0.8308500247837245,
    0.7980174756091543,
    0.7645730319948228,
    0.7306375397750703,
    0.6963090429362512,
    0.6616773648177633,
    0.626835062818204,
    0.591885000280325,
    0.5569447758907691,
    0.5221482834558627,
    0.48764475039283844,
    0.45359570144089695,
    0.42017038378876637,
    0.3875402425798559,
    0.3558730349274273,
    0.3253271145767293,
    0.29604631958807087,
    0.26815577073564645,
    0.24175875877904227,
    0.21693478081960307,
    0.1937386900469323,
    0.17220085359961676,
    0.152328169437531,
    0.13410577145564626,
    0.11749924764439476,
    0.10245720391753121,
    0.08891402191140418,
    0.07679267915167552,
    0.06600752195259452,
    0.05646690352019757,
    0.04807562084608628,
    0.040737103412967365,
    0.03435532409503683,
    0.02883641772939541
   ]
  },
  "hazard_ratio": {
   "time": [
    1e-06,
    0.02564102564102564,
    0.05128205128205128,
    0.07692307692307693,
    0.10256410256410256,
    0.1282051282051282,
    0.15384615384615385,
    0.1794871794871795,
    0.20512820512820512,
    0.23076923076923075,
    0.2564102564102564,
    0.28205128205128205,
    0.3076923076923077,
    0.3333333333333333,
    0.358974358974359,
    0.3846153846153846,
    0.41025641025641024,
    0.4358974358974359,
    0.4615384615384615,
    0.48717948717948717,
    0.5128205128205128,
    0.5384615384615384,
    0.5641025641025641,
    0.5897435897435898,
    0.6153846153846154,
    0.641025641025641,
    0.6666666666666666,
    0.6923076923076923,
    0.717948717948718,
    0.7435897435897436,
    0.7692307692307692,
    0.7948717948717948,
    0.8205128205128205,
    0.8461538461538461,
    0.8717948717948718,
    0.8974358974358974,
    0.923076923076923,
    0.9487179487179487,
    0.9743589743589743,
    1.0
   ],
   "values": [
    0.9099986449417451,
    0.8850982559293132,
    0.8715930004191074,
    0.8629434806284227,
    0.8561886395915209,
    0.849872133917692,
    0.8433045931240493,
    0.8362363996581661,
    0.8286827021818258,
    0.8208133801379994,
    0.8128752509927658,
    0.8051343576885184,
    0.7978343461185453,
    0.7911696137801982,
    0.785271984281791,
    0.7802087814409283,
    0.775989332126015,
    0.7725765915045886,
    0.7699008303605072,
    0.7678729870712345,
    0.7663961240851352,
    0.7653742287668156,
    0.7647182298940014,
    0.7643495157969264,
    0.7642014518074289,
    0.7642194504172202,
    0.7643601035867285,
    0.7645897927772031,
    0.7648830847507896,
    0.7652211219287591,
    0.765590135371319,
    0.7659801485836532,
    0.7663838992712626,
    0.7667959799317503,
    0.7672121826291941,
    0.7676290249103985,
    0.7680434299485773,
    0.768452532871173,
    0.7688535857740991,
    0.7692439355531601
   ]
  },
  "are_vs_rho": {
   "rho": [
    0.0,
    0.1,
    0.2,
    0.3,
    0.4,
    0.5,
    0.6,
    0.7,
    0.8,
    0.9
   ],
   "are": [
    8.856199767874589,
    8.838898912498781,
    8.876676752673644,
    8.9667881038588,
    9.108472786659682,
    9.303230422981317,
    9.55591779534801,
    9.877558418091013,
    10.293446023636063,
    10.876013759552897
   ]
  },
  "samplesize_vs_rho": {
   "rho": [
    0.0,
    0.1,
    0.2,
    0.3,
    0.4,
    0.5,
    0.6,
    0.7,
    0.8,
    0.9
   ],
   "n": [
    668,
    668,
    664,
    658,
    648,
    636,
    622,
    606,
    586,
    562
   ]
  }
 },
 "overlays": {
  "0.65": {
   "rho": [
    0.0,
    0.1,
    0.2,
    0.3,
    0.4,
    0.5,
    0.6,
    0.7,
    0.8,
    0.9
   ],
   "n": [
    276,
    276,
    272,
    270,
    264,
    260,
    252,
    244,
    234,
    222
   ]
  },
  "0.77": {
   "rho": [
    0.0,
    0.1,
    0.2,
    0.3,
    0.4,
    0.5,
    0.6,
    0.7,
    0.8,
    0.9
   ],
   "n": [
    668,
    668,
    664,
    658,
    648,
    636,
    622,
    606,
    586,
    562
   ]
  },
  "0.85": {
   "rho": [
    0.0,
    0.1,
    0.2,
    0.3,
    0.4,
    0.5,
    0.6,
    0.7,
    0.8,
    0.9
   ],
   "n": [
    1498,
    1508,
    1510,
    1506,
    1496,
    1482,
    1462,
    1440,
    1412,
    1378
   ]
  }
 },
 "corr_bounds": {
  "lower": -0.3273268353539885,
  "upper": 0.7637626158259733
 }
} as const;
