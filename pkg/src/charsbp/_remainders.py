"""Boundary remainder blocks R_i (index units) for nodes i < K.

Generated by scripts/derive_remainders.py; do not edit.
``zeta`` is the borrowing constant the blocks were derived for.
"""

REMAINDERS = {2: {'K': 2,
     'S': 3,
     'blocks': [[[0.12499999989864485, -0.24999999979728957, 0.1249999998986448],
                 [-0.24999999979728957, 0.49999999959457886, -0.24999999979728946],
                 [0.12499999989864481, -0.24999999979728948, 0.12499999989864476]],
                [[0.1250000001013554, -0.2500000002027107, 0.12500000010135537],
                 [-0.2500000002027107, 0.5000000004054211, -0.25000000020271057],
                 [0.12500000010135537, -0.25000000020271057, 0.1250000001013553]]],
     'm_b': 2,
     'zeta': 1.0},
 4: {'K': 5,
     'S': 8,
     'blocks': [[[0.027001368445376987, -0.08063902748725126, 0.07971515740428113,
                  -0.025383277003759967, -0.0007713652225481879, 1.8858603246659847e-05,
                  5.8285260654769383e-05, 1.9737448142250854e-18],
                 [-0.08063902748725126, 0.2538301636469155, -0.275936913886938, 0.11099803334017838,
                  -0.006088840859295463, -0.0023854160652636027, 0.00022200131165406404,
                  -3.0918622032424584e-19],
                 [0.07971515740428115, -0.2759369138869379, 0.35815911523863586,
                  -0.21480598844624796, 0.05910505171209148, -0.005034974030979112,
                  -0.0012014479908432785, -8.071692066307384e-19],
                 [-0.02538327700375997, 0.1109980333401784, -0.21480598844624796,
                  0.23737006288908793, -0.1525054363351607, 0.04943413310971696,
                  -0.005107527553814777, -6.711171471355625e-18],
                 [-0.0007713652225481927, -0.0060888408592954715, 0.059105051712091496,
                  -0.15250543633516067, 0.1753448856641115, -0.09452127353933995,
                  0.019436978580141425, -1.5377803562807332e-18],
                 [1.8858603246661165e-05, -0.0023854160652635966, -0.0050349740309791145,
                  0.04943413310971696, -0.09452127353933995, 0.07269397258028361,
                  -0.02020530065766455, 1.6141214169422924e-17],
                 [5.828526065476796e-05, 0.000222001311654064, -0.001201447990843277,
                  -0.005107527553814778, 0.01943697858014142, -0.020205300657664547,
                  0.006797011049872304, -8.749651729056475e-18],
                 [1.9737448142250866e-18, -3.09186220324246e-19, -8.071692066307394e-19,
                  -6.711171471355626e-18, -1.5377803562807317e-18, 1.6141214169422924e-17,
                  -8.749651729056475e-18, 2.1248690395450576e-32]],
                [[0.02595364101788086, -0.07713218797244813, 0.07539304945070693,
                  -0.022999526035592858, -0.0013424541411936291, 5.038234129417185e-05,
                  7.709533935279706e-05, 1.9511723162209454e-18],
                 [-0.07713218797244813, 0.24203837351482563, -0.2612062548507405,
                  0.10251328276464121, -0.0037032347510170516, -0.0027070991283682155,
                  0.00019712042310671103, -2.2858902255622766e-19],
                 [0.07539304945070693, -0.26120625485074045, 0.33903598001909135,
                  -0.20246667200915544, 0.054350942659719584, -0.0037728118188768388,
                  -0.0013342334507449006, -8.95719728987004e-19],
                 [-0.022999526035592865, 0.1025132827646412, -0.20246667200915544,
                  0.22701243781985522, -0.14637721851715238, 0.047014554001711686,
                  -0.004696858024307544, -6.713014802445287e-18],
                 [-0.001342454141193631, -0.0037032347510170243, 0.05435094265971956,
                  -0.14637721851715238, 0.17019515922121514, -0.09209153492760414,
                  0.01896834045603255, -1.4683317364922325e-18],
                 [5.03823412941712e-05, -0.0027070991283682216, -0.0037728118188768366,
                  0.04701455400171168, -0.09209153492760414, 0.07146385671965678,
                  -0.01995734718781343, 1.6094498011724724e-17],
                 [7.709533935279579e-05, 0.00019712042310671352, -0.0013342334507449008,
                  -0.004696858024307544, 0.01896834045603255, -0.019957347187813425,
                  0.006745882444373766, -8.740015037464725e-18],
                 [1.9511723162209458e-18, -2.285890225562257e-19, -8.957197289870032e-19,
                  -6.7130148024452885e-18, -1.468331736492232e-18, 1.6094498011724724e-17,
                  -8.740015037464722e-18, 2.1253013640225543e-32]],
                [[0.025457149079651638, -0.07547301974453019, 0.07335449116291713,
                  -0.021883273596069324, -0.001604164938766494, 6.239025881413017e-05,
                  8.642777798324761e-05, 1.9401201936212962e-18],
                 [-0.07547301974453019, 0.23646498026182816, -0.25425790167710666,
                  0.09853014526118406, -0.002597532171242654, -0.0028505475746009603,
                  0.00018387564446796045, -1.895316917909719e-19],
                 [0.07335449116291713, -0.2542579016771067, 0.33001403693415715,
                  -0.19664345028321656, 0.05210777857201719, -0.003178792622982134,
                  -0.0013961620857859118, -9.387879593651086e-19],
                 [-0.02188327359606932, 0.09853014526118405, -0.19664345028321653,
                  0.22208128724762158, -0.14343550871436653, 0.045849872089229825,
                  -0.004499072004383169, -6.713614587652399e-18],
                 [-0.0016041649387664929, -0.002597532171242659, 0.0521077785720172,
                  -0.14343550871436653, 0.16769765050492114, -0.0909072386659988,
                  0.018739015413436252, -1.432914467260064e-18],
                 [6.239025881412977e-05, -0.0028505475746009564, -0.0031787926229821396,
                  0.04584987208922983, -0.0909072386659988, 0.07085842787635681,
                  -0.01983411136081885, 1.6068761832165764e-17],
                 [8.642777798324782e-05, 0.0001838756444679609, -0.001396162085785915,
                  -0.004499072004383169, 0.018739015413436252, -0.01983411136081885,
                  0.006720026615100427, -8.734033319718326e-18],
                 [1.940120193621295e-18, -1.8953169179097181e-19, -9.387879593651083e-19,
                  -6.713614587652399e-18, -1.4329144672600647e-18, 1.6068761832165764e-17,
                  -8.734033319718324e-18, 2.1252644226792396e-32]],
                [[0.02451727957278803, -0.07233813129879271, 0.06952034789608666,
                  -0.019811019175611316, -0.002066910453578411, 7.246590688004021e-05,
                  0.00010596755222783689, 1.9196261004783038e-18],
                 [-0.07233813129879271, 0.22594816031480455, -0.24119159372977209,
                  0.09111470625640787, -0.0006041900567477704, -0.0030813775179073513,
                  0.00015242603200720122, -1.1751067444231906e-19],
                 [0.06952034789608666, -0.2411915937297721, 0.3130633754649897,
                  -0.18573662020321519, 0.04794032667612925, -0.002088413330230484,
                  -0.0015074227739876136, -1.019063103568333e-18],
                 [-0.019811019175611316, 0.09111470625640788, -0.18573662020321516,
                  0.212751386617962, -0.13781621356450433, 0.04361733185961151,
                  -0.004119571790650685, -6.714186067032491e-18],
                 [-0.0020669104535784117, -0.0006041900567477653, 0.04794032667612923,
                  -0.13781621356450433, 0.16285223800789211, -0.08859472902157849,
                  0.018289478412387743, -1.3623479402420698e-18],
                 [7.246590688003619e-05, -0.0030813775179073456, -0.002088413330230483,
                  0.0436173318596115, -0.08859472902157847, 0.069663207933501,
                  -0.019588485830276222, 1.6013303265197652e-17],
                 [0.00010596755222783789, 0.00015242603200720157, -0.0015074227739876142,
                  -0.004119571790650685, 0.01828947841238774, -0.019588485830276222,
                  0.006667608398291696, -8.719821580390542e-18],
                 [1.919626100478303e-18, -1.175106744423201e-19, -1.0190631035683328e-18,
                  -6.714186067032492e-18, -1.3623479402420688e-18, 1.601330326519765e-17,
                  -8.719821580390544e-18, 2.1246557577342463e-32]],
                [[0.00018797163890205314, 0.0012333012955439374, -0.006191329227316966,
                  0.0096222394498851, -0.006871330524723606, 0.0023469232979277995,
                  -0.00032777593021831317, 1.4550103706183714e-19],
                 [0.0012333012955439396, 0.011936060519719916, -0.05196615938485485,
                  0.0727045254920423, -0.04417674479735543, 0.011024440286140396,
                  -0.0007554234112362322, 8.448176091145477e-19],
                 [-0.006191329227316971, -0.05196615938485485, 0.2475459530607458,
                  -0.38131132134574564, 0.2711897779310626, -0.09165063177969647,
                  0.012383710745805368, -4.269424463055184e-18],
                 [0.009622239449885103, 0.07270452549204232, -0.38131132134574564,
                  0.6486169427685332, -0.5293617468998224, 0.21686188671750684,
                  -0.03713252618239921, 1.0991658005269807e-17],
                 [-0.006871330524723611, -0.044176744797355415, 0.2711897779310625,
                  -0.5293617468998224, 0.5057839789574988, -0.24613012180466237,
                  0.049566187138002406, -1.7989118884550993e-17],
                 [0.0023469232979278012, 0.011024440286140403, -0.09165063177969648,
                  0.21686188671750684, -0.24613012180466237, 0.13907336935732145,
                  -0.031525866074537626, 1.4983867337569727e-17],
                 [-0.00032777593021831306, -0.0007554234112362361, 0.012383710745805375,
                  -0.03713252618239922, 0.04956618713800241, -0.031525866074537626,
                  0.007791693714583609, -4.707300641409702e-18],
                 [1.4550103706183757e-19, 8.448176091145474e-19, -4.269424463055187e-18,
                  1.0991658005269807e-17, -1.7989118884550993e-17, 1.4983867337569727e-17,
                  -4.707300641409702e-18, 5.962698944739561e-33]]],
     'm_b': 4,
     'zeta': 0.5776},
 6: {'K': 8,
     'S': 12,
     'blocks': [[[0.01997395854546185, -0.08146584206546272, 0.1258327192619859,
                  -0.08804018900229377, 0.023970638324169544, 0.0006582262304210769,
                  -0.0014086931944076056, 0.0006697884425240737, -0.00022903380445248958,
                  4.1076016552660695e-05, -2.6487544989236025e-06, -1.7665111624575517e-18],
                 [-0.0814658420654627, 0.3387311378871172, -0.5382437847109552, 0.3939335907117736,
                  -0.11595463429392136, -0.004320245968962636, 0.010879768686882629,
                  -0.004762194940310561, 0.0013924427672194896, -0.00019501747688780945,
                  4.779403508692969e-06, 4.276429546805182e-18],
                 [0.1258327192619859, -0.5382437847109552, 0.8916939842491615, -0.6981523562947173,
                  0.23462438167668542, 0.0015180597013968336, -0.026863029825473488,
                  0.01280484539813132, -0.003710873388276807, 0.0005042311654127719,
                  -8.17723335245793e-06, -7.29735825704463e-18],
                 [-0.08804018900229375, 0.39393359071177353, -0.6981523562947173,
                  0.6130298797913472, -0.26572968066002967, 0.03742384580694701,
                  0.017482366896603683, -0.014687092161916132, 0.005711567050304592,
                  -0.0010232048405380805, 5.1272702520316415e-05, 1.0268681266653838e-17],
                 [0.023970638324169537, -0.11595463429392132, 0.2346243816766854,
                  -0.26572968066002967, 0.19805176589623477, -0.11055917745183289,
                  0.04428518288487977, -0.007298143950252774, -0.002472662476773679,
                  0.0011823537568549172, -0.00010002370601516079, -4.843776437116619e-18],
                 [0.0006582262304210749, -0.00432024596896263, 0.0015180597013968553,
                  0.03742384580694701, -0.11055917745183289, 0.15403644367149052,
                  -0.1256493696556071, 0.06248415816516712, -0.01803079057055221,
                  0.0025679847782284827, -0.00012913470669579383, 1.133942166584248e-18],
                 [-0.0014086931944076052, 0.010879768686882611, -0.026863029825473506,
                  0.017482366896603683, 0.044285182884879766, -0.1256493696556071,
                  0.16023932350572984, -0.12257781268829113, 0.055268101618514344,
                  -0.012527624136623883, 0.000871785907792854, -2.1922409786560014e-18],
                 [0.0006697884425240749, -0.004762194940310551, 0.012804845398131337,
                  -0.014687092161916123, -0.007298143950252765, 0.06248415816516713,
                  -0.12257781268829111, 0.12805919336145977, -0.07288832416235293,
                  0.0198111438550888, -0.0016155613192475767, -3.685453382914172e-18],
                 [-0.00022903380445249142, 0.0013924427672194846, -0.0037108733882768134,
                  0.005711567050304588, -0.0024726624767736826, -0.018030790570552215,
                  0.055268101618514344, -0.07288832416235293, 0.0485943340289172,
                  -0.015141803437797476, 0.001507042375250026, -2.477058648640636e-19],
                 [4.107601655266061e-05, -0.00019501747688780777, 0.0005042311654127722,
                  -0.00102320484053808, 0.0011823537568549192, 0.002567984778228485,
                  -0.012527624136623885, 0.0198111438550888, -0.015141803437797472,
                  0.005499607111480383, -0.0007187467917707653, 9.389026476087246e-18],
                 [-2.648754498923611e-06, 4.7794035086929635e-06, -8.177233352458064e-06,
                  5.127270252031632e-05, -0.00010002370601516087, -0.00012913470669579386,
                  0.0008717859077928538, -0.0016155613192475767, 0.001507042375250026,
                  -0.0007187467917707653, 0.00013941212250874542, -5.035033373065217e-18],
                 [-1.766511162457551e-18, 4.276429546805181e-18, -7.297358257044628e-18,
                  1.0268681266653842e-17, -4.8437764371166196e-18, 1.1339421665842482e-18,
                  -2.1922409786560014e-18, -3.685453382914173e-18, -2.477058648640628e-19,
                  9.389026476087244e-18, -5.035033373065217e-18, 5.574947513713496e-31]],
                [[0.012715057594711041, -0.050225791814987826, 0.0735263592920105,
                  -0.04617314656947133, 0.008935811353540482, 0.0013185846570991295,
                  -1.1908828728938274e-05, -0.00011082765434098479, 2.985042145904939e-05,
                  -4.671933724837888e-06, 6.834824334174171e-07, -1.2749049574706146e-18],
                 [-0.05022579181498783, 0.20415472890989014, -0.3125173853959346,
                  0.21253472629063705, -0.050024454512201603, -0.007666125153180505,
                  0.004613202904795586, -0.0009465184754951944, 3.633711375931811e-05,
                  5.277951278717335e-05, -1.1499380068731915e-05, 2.1465489309781302e-18],
                 [0.07352635929201051, -0.3125173853959346, 0.5118483205306199,
                  -0.39064007918327615, 0.12018062389724059, 0.009409997272739178,
                  -0.016550144986808034, 0.00568220919218665, -0.0009266947371167785,
                  -3.952222095928796e-05, 2.6316339297231106e-05, -3.632024900703835e-18],
                 [-0.04617314656947133, 0.21253472629063705, -0.3906400791832761,
                  0.35972263117724296, -0.16560776827504126, 0.02455692426490587,
                  0.012413733374790617, -0.009655887664342874, 0.0033209557937707735,
                  -0.00048604946346352646, 1.3960254248558439e-05, 7.127507006606023e-18],
                 [0.00893581135354048, -0.050024454512201603, 0.12018062389724057,
                  -0.16560776827504128, 0.14913642187573745, -0.09273702925213458,
                  0.036074948424099536, -0.003744170708802834, -0.003418697849859808,
                  0.0013080929577462853, -0.00010377791032496063, -3.4675083326242362e-18],
                 [0.0013185846570991284, -0.007666125153180499, 0.009409997272739177,
                  0.024556924264905876, -0.09273702925213458, 0.13279310422263152,
                  -0.1057820041997331, 0.04920971708549441, -0.012343866757055193,
                  0.0012740852275907497, -3.338736835713958e-05, 8.056995719989124e-19],
                 [-1.1908828728936317e-05, 0.004613202904795584, -0.016550144986808037,
                  0.012413733374790605, 0.036074948424099536, -0.10578200419973309,
                  0.13671533218834384, -0.10429278864981949, 0.04645843993541381,
                  -0.010334223805617897, 0.0006954136432639695, -2.1108435981463166e-18],
                 [-0.00011082765434098614, -0.0009465184754951944, 0.005682209192186661,
                  -0.00965588766434287, -0.003744170708802843, 0.04920971708549441,
                  -0.1042927886498195, 0.11251662187245662, -0.06499405080820765,
                  0.017786312359442287, -0.0014506165485708637, -3.654320771323997e-18],
                 [2.9850421459051216e-05, 3.6337113759313596e-05, -0.0009266947371167806,
                  0.003320955793770773, -0.003418697849859804, -0.012343866757055191,
                  0.04645843993541382, -0.06499405080820765, 0.04450662403968213,
                  -0.014092005409846817, 0.0014231082580012245, -3.02335175403783e-19],
                 [-4.6719337248389066e-06, 5.2779512787176115e-05, -3.95222209592881e-05,
                  -0.0004860494634635269, 0.001308092957746287, 0.0012740852275907495,
                  -0.010334223805617899, 0.017786312359442287, -0.01409200540984682,
                  0.005233212813489914, -0.000698010037444029, 9.381318548511688e-18],
                 [6.834824334174542e-07, -1.1499380068731991e-05, 2.631633929723098e-05,
                  1.3960254248558366e-05, -0.00010377791032496059, -3.338736835713966e-05,
                  0.0006954136432639697, -0.001450616548570864, 0.0014231082580012247,
                  -0.000698010037444029, 0.0001378092675212803, -5.0191363224097776e-18],
                 [-1.2749049574706144e-18, 2.14654893097813e-18, -3.632024900703834e-18,
                  7.127507006606023e-18, -3.4675083326242362e-18, 8.056995719989119e-19,
                  -2.1108435981463178e-18, -3.6543207713239974e-18, -3.0233517540378284e-19,
                  9.381318548511688e-18, -5.019136322409778e-18, 5.549586702431118e-31]],
                [[0.012863556453879836, -0.05086360543147233, 0.07458990378520938,
                  -0.047015560987315935, 0.009226965993626051, 0.001315039780713169,
                  -4.14272462620293e-05, -9.790433219443762e-05, 2.6618618808056996e-05,
                  -4.229147320071123e-06, 6.425123279988286e-07, -1.2851896494471168e-18],
                 [-0.05086360543147233, 0.2068976398943925, -0.3171027548658969,
                  0.21618932048984635, -0.05131349776552435, -0.007635231412751283,
                  0.0047495743151596695, -0.001017071829282885, 5.7164383754085004e-05,
                  4.9823880052002586e-05, -1.1361658276030348e-05, 2.1910709652975586e-18],
                 [0.07458990378520938, -0.3171027548658969, 0.5195508720496574,
                  -0.39684966894607165, 0.1224561608010247, 0.009289260586585083,
                  -0.016777417409348114, 0.005826380592910469, -0.000977519888922343,
                  -3.123793635379773e-05, 2.602123120488447e-05, -3.710256386204017e-18],
                 [-0.04701556098731594, 0.21618932048984635, -0.3968496689460717,
                  0.36486409145329435, -0.16767217152758573, 0.02484776866085756,
                  0.012506903100451147, -0.009759211013084981, 0.0033706175073546416,
                  -0.0004965916559711206, 1.4502918226175877e-05, 7.197422553459586e-18],
                 [0.009226965993626051, -0.051313497765524345, 0.12245616080102467,
                  -0.1676721715275857, 0.15024529581510465, -0.09323040012747412,
                  0.036333448397014446, -0.0038568169384254436, -0.003390126022348743,
                  0.0013048692570136963, -0.00010372788242594527, -3.499423059846202e-18],
                 [0.0013150397807131686, -0.007635231412751282, 0.009289260586585081,
                  0.024847768660857555, -0.09323040012747412, 0.13341622803406222,
                  -0.10636683889486011, 0.049597246795067905, -0.012507883019981634,
                  0.001310861417682626, -3.605181990105075e-05, 8.139311909423313e-19],
                 [-4.142724626202797e-05, 0.004749574315159665, -0.01677741740934811,
                  0.01250690310045115, 0.03633344839701444, -0.10636683889486011,
                  0.13740895480168772, -0.10483560471270968, 0.04672202140970059,
                  -0.010400422597999733, 0.0007008088371660029, -2.1147511341683462e-18],
                 [-9.790433219443733e-05, -0.0010170718292828733, 0.005826380592910471,
                  -0.009759211013084986, -0.003856816938425438, 0.049597246795067905,
                  -0.1048356047127097, 0.11298391544675451, -0.06523327646207654,
                  0.017848015223743248, -0.0014556727707020986, -3.654481069746613e-18],
                 [2.6618618808056315e-05, 5.716438375408256e-05, -0.0009775198889223453,
                  0.0033706175073546438, -0.003390126022348744, -0.012507883019981635,
                  0.0467220214097006, -0.06523327646207654, 0.044630255036944254,
                  -0.014123424174431244, 0.0014255526111989249, -2.9973133158485165e-19],
                 [-4.229147320070887e-06, 4.9823880052003026e-05, -3.123793635379637e-05,
                  -0.0004965916559711205, 0.0013048692570136959, 0.0013108614176826257,
                  -0.010400422597999734, 0.017848015223743248, -0.014123424174431244,
                  0.0052408920744974824, -0.0006985563409130744, 9.381143835761214e-18],
                 [6.425123279988479e-07, -1.1361658276030533e-05, 2.6021231204884526e-05,
                  1.4502918226175943e-05, -0.0001037278824259453, -3.60518199010507e-05,
                  0.000700808837166003, -0.0014556727707020984, 0.0014255526111989247,
                  -0.0006985563409130744, 0.00013784236209416837, -5.019735914451343e-18],
                 [-1.2851896494471172e-18, 2.191070965297559e-18, -3.710256386204018e-18,
                  7.197422553459585e-18, -3.4994230598462034e-18, 8.139311909423313e-19,
                  -2.1147511341683462e-18, -3.654481069746612e-18, -2.997313315848519e-19,
                  9.381143835761214e-18, -5.019735914451345e-18, 5.550817113712819e-31]],
                [[0.01168032831358559, -0.04578392202329188, 0.06612753029199722,
                  -0.04032847353024128, 0.006936003043300456, 0.0013254837698144415,
                  0.0001970084249437676, -0.00019800273109776435, 5.058898227247456e-05,
                  -7.553130421680233e-06, 1.0085891383600785e-06, -1.204202488624065e-18],
                 [-0.04578392202329188, 0.18506054781469147, -0.280622711802384, 0.1871628727799143,
                  -0.04113812311436992, -0.007818790366325247, 0.0036401751457323115,
                  -0.00045439463479547427, -0.0001057447833945776, 7.253826646496214e-05,
                  -1.2447282241211427e-05, 1.8399770306319954e-18],
                 [0.06612753029199722, -0.280622711802384, 0.45828383005678713, -0.347479034141738,
                  0.10439539148753896, 0.01020032028507734, -0.014921067058128375,
                  0.004649103772265834, -0.0005637469994954785, -9.779759656617908e-05,
                  2.818170464480164e-05, -3.088660276066825e-18],
                 [-0.04032847353024128, 0.1871628727799143, -0.347479034141738, 0.32388941328325715,
                  -0.15110561292209732, 0.022436468057505755, 0.011769053421191389,
                  -0.00889667867835621, 0.002948394568546699, -0.00040636910744240053,
                  9.966269460523662e-06, 6.6345056721963594e-18],
                 [0.006936003043300453, -0.04113812311436991, 0.10439539148753896,
                  -0.15110561292209732, 0.1411244034589576, -0.08902002064344401,
                  0.034116771237496256, -0.002918442312504793, -0.003611941055659686,
                  0.001325042713011545, -0.00010347189222983195, -3.2389750375231914e-18],
                 [0.00132548376981444, -0.007818790366325249, 0.010200320285077339,
                  0.022436468057505755, -0.08902002064344401, 0.12808725232548046,
                  -0.10139166845803153, 0.04632058386277536, -0.011129068086999715,
                  0.0010033575666876723, -1.3918312540173654e-05, 7.459367912982224e-19],
                 [0.00019700842494376793, 0.0036401751457323167, -0.01492106705812837,
                  0.011769053421191387, 0.03411677123749627, -0.10139166845803156,
                  0.1315113477476002, -0.10021696888129335, 0.044476007589889795,
                  -0.009835282705462266, 0.000654623536061691, -2.081269541459598e-18],
                 [-0.00019800273109776254, -0.0004543946347954832, 0.00464910377226584,
                  -0.008896678678356215, -0.0029184423125048113, 0.04632058386277538,
                  -0.10021696888129335, 0.10899430269765222, -0.06318662237130289,
                  0.01731944633047871, -0.0014123270538215593, -3.6512840009322965e-18],
                 [5.058898227247403e-05, -0.00010574478339457842, -0.00056374699949548,
                  0.002948394568546702, -0.0036119410556596813, -0.011129068086999722,
                  0.04447600758988979, -0.06318662237130289, 0.04357255632580059,
                  -0.013855261884331142, 0.0014048377146739872, -3.2546559907617743e-19],
                 [-7.5531304216797396e-06, 7.253826646496158e-05, -9.779759656617828e-05,
                  -0.00040636910744239966, 0.0013250427130115426, 0.0010033575666876721,
                  -0.009835282705462266, 0.01731944633047871, -0.01385526188433114,
                  0.005175922918226181, -0.0006940433706453886, 9.384001749252715e-18],
                 [1.0085891383600614e-06, -1.2447282241211422e-05, 2.8181704644801604e-05,
                  9.966269460523651e-06, -0.00010347189222983175, -1.3918312540173713e-05,
                  0.0006546235360616908, -0.0014123270538215593, 0.0014048377146739872,
                  -0.0006940433706453885, 0.0001375900974987575, -5.0145642996849785e-18],
                 [-1.2042024886240644e-18, 1.8399770306319954e-18, -3.0886602760668237e-18,
                  6.634505672196358e-18, -3.2389750375231918e-18, 7.459367912982222e-19,
                  -2.081269541459597e-18, -3.651284000932297e-18, -3.25465599076177e-19,
                  9.384001749252718e-18, -5.014564299684979e-18, 5.539699561600535e-31]],
                [[0.011962419509913402, -0.046994724344771664, 0.0681433749074845,
                  -0.041917937841245256, 0.007475002348075509, 0.001328379790248156,
                  0.00013935973425963663, -0.00017595040538283136, 4.6255409230212377e-05,
                  -7.121946394697579e-06, 9.428385827491913e-07, -1.2235393449157786e-18],
                 [-0.046994724344771664, 0.19026504362112426, -0.28931333723577407,
                  0.194066728741753, -0.043539446240039754, -0.007795295618839566,
                  0.003909948022563229, -0.0005832746608678282, -7.20501846519044e-05,
                  6.873534761643175e-05, -1.2327448111338013e-05, 1.9239229455552645e-18],
                 [0.0681433749074845, -0.28931333723577407, 0.4728790091472783, -0.3592336506049341,
                  0.10867891879019008, 0.010005880486223888, -0.015373671916720557,
                  0.004926104832796997, -0.0006561934822877727, -8.438793576457567e-05,
                  2.795301150657613e-05, -3.2381893427868417e-18],
                 [-0.041917937841245256, 0.19406672874175296, -0.3592336506049341,
                  0.33366261467999114, -0.1550722131477312, 0.023021378432379263,
                  0.011942938315210292, -0.00910102791116192, 0.0030471435456906376,
                  -0.00042684807802944615, 1.0873868078354051e-05, 6.77120751021163e-18],
                 [0.007475002348075511, -0.043539446240039754, 0.1086789187901901,
                  -0.15507221314773123, 0.14335260700070446, -0.09008032340640452,
                  0.034682555690819086, -0.0031579183991445646, -0.003555740938957937,
                  0.0013201237320637194, -0.00010356542957561552, -3.3026323522706935e-18],
                 [0.001328379790248158, -0.007795295618839569, 0.010005880486223882,
                  0.023021378432379277, -0.09008032340640452, 0.12943867483844218,
                  -0.10265163663484901, 0.04714797107401551, -0.011476039678473672,
                  0.0010804486711442534, -1.9437953886139578e-05, 7.626785222721962e-19],
                 [0.00013935973425963495, 0.003909948022563228, -0.015373671916720563,
                  0.011942938315210285, 0.03468255569081911, -0.10265163663484903,
                  0.1330037928793408, -0.10138593468773718, 0.04504486996816742,
                  -0.009978580779529777, 0.0006663594084759427, -2.0901825203420264e-18],
                 [-0.00017595040538283035, -0.0005832746608678294, 0.004926104832797011,
                  -0.009101027911161921, -0.0031579183991445703, 0.047147971074015506,
                  -0.10138593468773718, 0.11000562240656085, -0.06370588699669115,
                  0.017453633266834905, -0.0014233385192227313, -3.65187379295407e-18],
                 [4.6255409230212885e-05, -7.205018465190267e-05, -0.0006561934822877799,
                  0.003047143545690639, -0.003555740938957928, -0.011476039678473672,
                  0.04504486996816742, -0.06370588699669115, 0.043840668326840034,
                  -0.013923070902127152, 0.001410044933261329, -3.1859507251400037e-19],
                 [-7.121946394698249e-06, 6.873534761643322e-05, -8.438793576457527e-05,
                  -0.00042684807802944685, 0.0013201237320637205, 0.0010804486711442518,
                  -0.009978580779529778, 0.017453633266834905, -0.013923070902127152,
                  0.005192220741487145, -0.0006951521173007923, 9.383092217599561e-18],
                 [9.428385827491423e-07, -1.2327448111337856e-05, 2.795301150657592e-05,
                  1.087386807835389e-05, -0.00010356542957561533, -1.9437953886139534e-05,
                  0.0006663594084759428, -0.0014233385192227313, 0.001410044933261329,
                  -0.0006951521173007924, 0.000137647408191622, -5.015888769843072e-18],
                 [-1.2235393449157776e-18, 1.9239229455552633e-18, -3.238189342786841e-18,
                  6.771207510211628e-18, -3.30263235227069e-18, 7.626785222721962e-19,
                  -2.090182520342027e-18, -3.651873792954072e-18, -3.185950725140006e-19,
                  9.383092217599569e-18, -5.015888769843074e-18, 5.542633981440353e-31]],
                [[0.012008906685852645, -0.04719411548906258, 0.06847513996884848,
                  -0.042179737700147726, 0.0075648124536501875, 0.0013274329272254964,
                  0.00013020793623555137, -0.00017153006162284016, 4.47558086682879e-05,
                  -6.7758421580822565e-06, 9.033125102870933e-07, -1.2266358019944322e-18],
                 [-0.04719411548906258, 0.19112153469481308, -0.2907427213764609, 0.195202997249624,
                  -0.04393873536084939, -0.007785588405535198, 0.003952576357661495,
                  -0.000607276490087628, -6.350991424859282e-05, 6.703096251912392e-05,
                  -1.2192228372672814e-05, 1.937395398617531e-18],
                 [0.06847513996884849, -0.2907427213764609, 0.47527812135789027,
                  -0.36116656265741764, 0.10938894115738974, 0.009965179512118618,
                  -0.015444740556195071, 0.004975040284424308, -0.0006755012588987151,
                  -8.064017716743797e-05, 2.7743745467616963e-05, -3.2622538016503706e-18],
                 [-0.042179737700147726, 0.19520299724962403, -0.36116656265741764,
                  0.33526880116290636, -0.15572622277536152, 0.023121924419288606,
                  0.011969452325373844, -0.009136374824131132, 0.003065733464550434,
                  -0.000431142328613568, 1.1131663929034835e-05, 6.7932927897014164e-18],
                 [0.007564812453650186, -0.0439387353608494, 0.10938894115738973,
                  -0.1557262227753615, 0.14371654866980024, -0.09025136110837285,
                  0.03477279281812529, -0.0031951653876723268, -0.003547641257032289,
                  0.0013196448071928395, -0.00010361401687064948, -3.3129772063646982e-18],
                 [0.0013274329272254944, -0.007785588405535187, 0.009965179512118621,
                  0.023121924419288602, -0.09025136110837285, 0.12965329312653556,
                  -0.1028510445988814, 0.0472785367417982, -0.011530595542122324,
                  0.0010925196175302764, -2.029668958461571e-05, 7.653566494904707e-19],
                 [0.00013020793623555116, 0.003952576357661491, -0.015444740556195071,
                  0.011969452325373848, 0.03477279281812527, -0.10285104459888139,
                  0.13323958659303625, -0.10157048337883479, 0.04513461502941662,
                  -0.010001168618184592, 0.0006682060922467145, -2.0914609632342706e-18],
                 [-0.000171530061622842, -0.0006072764900876201, 0.004975040284424313,
                  -0.00913637482413114, -0.0031951653876723077, 0.047278536741798195,
                  -0.1015704833788348, 0.11016556932973653, -0.06378814456004131,
                  0.017474913783795943, -0.0014250854373649084, -3.652130505264461e-18],
                 [4.475580866828806e-05, -6.350991424859638e-05, -0.0006755012588987164,
                  0.0030657334645504365, -0.003547641257032303, -0.011530595542122322,
                  0.04513461502941662, -0.06378814456004131, 0.04388329579681545,
                  -0.013933885817476406, 0.0014108782503689126, -3.174165018108879e-19],
                 [-6.7758421580822006e-06, 6.703096251912475e-05, -8.064017716743614e-05,
                  -0.0004311423286135685, 0.001319644807192841, 0.001092519617530277,
                  -0.010001168618184592, 0.017474913783795943, -0.013933885817476408,
                  0.0051948353020383016, -0.0006953316894763875, 9.38292868087201e-18],
                 [9.033125102870341e-07, -1.2192228372672779e-05, 2.7743745467616827e-05,
                  1.1131663929034813e-05, -0.0001036140168706496, -2.0296689584615735e-05,
                  0.0006682060922467146, -0.0014250854373649082, 0.0014108782503689126,
                  -0.0006953316894763876, 0.00013765699714662436, -5.0160987383501384e-18],
                 [-1.2266358019944333e-18, 1.9373953986175313e-18, -3.262253801650371e-18,
                  6.793292789701417e-18, -3.312977206364696e-18, 7.653566494904704e-19,
                  -2.091460963234272e-18, -3.6521305052644615e-18, -3.17416501810887e-19,
                  9.382928680872012e-18, -5.0160987383501384e-18, 5.543100588490828e-31]],
                [[0.01191775745639208, -0.04680294654997356, 0.06782380242352654,
                  -0.0416653956502202, 0.007388793864154598, 0.001328058647452361,
                  0.00014898359483314272, -0.000179870666014675, 4.704704948040559e-05,
                  -7.178353270672348e-06, 9.481836396826723e-07, -1.220593746886346e-18],
                 [-0.04680294654997356, 0.18944048366662009, -0.28793553226305574,
                  0.19297022312644896, -0.04315603677731076, -0.007799354798785679,
                  0.0038650470553353283, -0.0005609493810831004, -7.793408060597054e-05,
                  6.933146037650805e-05, -1.233145796531434e-05, 1.911215566205159e-18],
                 [0.06782380242352654, -0.28793553226305574, 0.4705643538354173,
                  -0.35736742743068234, 0.10799670824780243, 0.01003640525207243,
                  -0.015298161895098068, 0.004878994667596799, -0.0006405678060222125,
                  -8.654909386119151e-05, 2.7974062303367347e-05, -3.2157461785913948e-18],
                 [-0.04166539565022019, 0.19297022312644896, -0.35736742743068234,
                  0.33211141538935657, -0.15444316739592576, 0.022930710566653262,
                  0.011911972847042648, -0.00906651624070104, 0.003031133502584733,
                  -0.00042369804481916766, 1.074933026303994e-05, 6.7509514845244514e-18],
                 [0.007388793864154595, -0.04315603677731075, 0.1079967082478024,
                  -0.15444316739592576, 0.1430022308157079, -0.08991560475352671,
                  0.034594448528570826, -0.003119340317205023, -0.003565800447978747,
                  0.001321364749981577, -0.00010359651427103765, -3.293485577411062e-18],
                 [0.0013280586474523613, -0.007799354798785679, 0.010036405252072443,
                  0.02293071056665326, -0.08991560475352671, 0.12922694965538492,
                  -0.10245171619249197, 0.047014664741463305, -0.01141925765719677,
                  0.001067656835604763, -1.8512296629603853e-05, 7.605654598248959e-19],
                 [0.00014898359483314551, 0.0038650470553353244, -0.015298161895098068,
                  0.011911972847042644, 0.034594448528570826, -0.10245171619249195,
                  0.13276582015374, -0.10119905681060866, 0.04495383102102743,
                  -0.009955656649018202, 0.0006644883466674036, -2.08920148395747e-18],
                 [-0.00017987066601467665, -0.0005609493810831038, 0.004878994667596794,
                  -0.009066516240701046, -0.003119340317205017, 0.0470146647414633,
                  -0.10119905681060866, 0.10984498114376355, -0.06362379717253111,
                  0.017432503786147854, -0.0014216137508278285, -3.651511005228922e-18],
                 [4.704704948040535e-05, -7.793408060596509e-05, -0.0006405678060222089,
                  0.0030311335025847335, -0.003565800447978746, -0.011419257657196771,
                  0.04495383102102743, -0.06362379717253111, 0.04379859337261869,
                  -0.013912484177162811, 0.0014092363957864053, -3.1975896518076694e-19],
                 [-7.17835327067233e-06, 6.933146037650695e-05, -8.654909386119237e-05,
                  -0.0004236980448191681, 0.0013213647499815775, 0.0010676568356047646,
                  -0.009955656649018204, 0.017432503786147854, -0.01391248417716281,
                  0.005189690367983684, -0.0006949808819623239, 9.383249457401415e-18],
                 [9.481836396826878e-07, -1.2331457965314286e-05, 2.797406230336759e-05,
                  1.0749330263040003e-05, -0.0001035965142710378, -1.8512296629603897e-05,
                  0.0006644883466674037, -0.0014216137508278285, 0.0014092363957864053,
                  -0.0006949808819623238, 0.0001376385829961652, -5.0156850106877924e-18],
                 [-1.220593746886346e-18, 1.9112155662051592e-18, -3.2157461785913948e-18,
                  6.750951484524452e-18, -3.29348557741106e-18, 7.605654598248956e-19,
                  -2.0892014839574693e-18, -3.651511005228925e-18, -3.1975896518076713e-19,
                  9.383249457401418e-18, -5.015685010687792e-18, 5.542183281984269e-31]],
                [[0.0003193165655523962, -0.005185924409925279, 0.017815629834622284,
                  -0.02602103707297759, 0.018605161453580158, -0.006910711420340258,
                  0.0020516236786153404, -0.0008419201998504053, 0.00017388739812048516,
                  -3.545663261430792e-06, -2.4801641355806818e-06, 8.554949741304572e-19],
                 [-0.0051859244099252775, 0.08683337750750893, -0.30122464605982613,
                  0.44398996683706815, -0.3204480173879039, 0.11771317482360251,
                  -0.030293359998140392, 0.010240598127663677, -0.0015073275386481792,
                  -0.00018522195293139184, 6.738005153025852e-05, -1.2732851566029053e-17],
                 [0.01781562983462228, -0.30122464605982613, 1.0502401699405082, -1.559453987850468,
                  1.1424276981717185, -0.4354951192861743, 0.12028856490023192,
                  -0.04232228320457072, 0.007964082619774515, -8.409620473945242e-05,
                  -0.0001560128610714102, 3.598466625523715e-17],
                 [-0.026021037072977607, 0.4439899668370682, -1.5594539878504683, 2.347489036014935,
                  -1.7778657566331366, 0.7466635134514802, -0.2546811187595838, 0.10407876673290996,
                  -0.028048607010162697, 0.0039716812966580925, -0.00012245700672961423,
                  -4.344819206143781e-17],
                 [0.018605161453580158, -0.32044801738790396, 1.1424276981717187,
                  -1.7778657566331364, 1.4687254188866947, -0.7810897769294384, 0.39270558225492885,
                  -0.20006846676112708, 0.07009009378906293, -0.014081491973865169,
                  0.000999555129489779, 2.8420137666480504e-17],
                 [-0.0069107114203402625, 0.11771317482360255, -0.4354951192861744,
                  0.7466635134514803, -0.7810897769294384, 0.655517788781955, -0.5157817715125435,
                  0.32562713130150767, -0.133784720909843, 0.029769752552198766,
                  -0.002229260852405569, -9.847929396396424e-18],
                 [0.002051623678615332, -0.03029335999814037, 0.1202885649002319,
                  -0.25468111875958377, 0.3927055822549289, -0.5157817715125435, 0.5470972856382673,
                  -0.40855615194383327, 0.18878029444351824, -0.045022596263122924,
                  0.0034116475616618753, 1.6038438378020213e-18],
                 [-0.0008419201998503981, 0.010240598127663656, -0.042322283204570675,
                  0.10407876673290993, -0.20006846676112708, 0.3256271313015077,
                  -0.40855615194383327, 0.3474338350452266, -0.17761420033659572,
                  0.045707364727798204, -0.0036846734891285864, -3.89328820811678e-18],
                 [0.00017388739812048592, -0.0015073275386481935, 0.007964082619774522,
                  -0.0280486070101627, 0.07009009378906295, -0.13378472090984297,
                  0.1887802944435182, -0.1776142003365957, 0.09912192894680372,
                  -0.02768473086348537, 0.002509299461454907, -1.0392087506171234e-18],
                 [-3.5456632614301507e-06, -0.00018522195293139342, -8.409620473945082e-05,
                  0.003971681296658094, -0.014081491973865174, 0.02976975255219876,
                  -0.04502259626312292, 0.0457073647277982, -0.027684730863485368,
                  0.008551396448571525, -0.0009385121038207659, 8.362456498688152e-18],
                 [-2.480164135580669e-06, 6.738005153025838e-05, -0.0001560128610714101,
                  -0.0001224570067296146, 0.000999555129489779, -0.0022292608524055687,
                  0.0034116475616618744, -0.003684673489128586, 0.002509299461454907,
                  -0.0009385121038207659, 0.00014551427315465766, -4.265129249730789e-18],
                 [8.5549497413045825e-19, -1.2732851566029054e-17, 3.598466625523716e-17,
                  -4.3448192061437816e-17, 2.842013766648051e-17, -9.847929396396423e-18,
                  1.603843837802022e-18, -3.8932882081167806e-18, -1.0392087506171244e-18,
                  8.362456498688154e-18, -4.265129249730791e-18, 4.6253553464508385e-31]]],
     'm_b': 7,
     'zeta': 0.3696}}
