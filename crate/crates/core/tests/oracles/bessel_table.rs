// Generated by gen_bessel_table.py; do not edit by hand.
// (nu, x, I, I', K, K') with each value as (mantissa, binary exponent).
pub const BESSEL_TABLE: &[(f64, f64, (f64, i32), (f64, i32), (f64, i32), (f64, i32))] = &[
    (0.0, 0.001, (0.50000012500000781250, 1), (0.51200006400000267732, -10), (0.87796110007029766535, 3), (-0.97655882632430229830, 10)),
    (0.0, 0.05, (0.50031254883151597451, 1), (0.80025002604302309031, -5), (0.77855850736799745966, 2), (-0.62217732268382829365, 5)),
    (0.0, 0.7, (0.56315150915340459077, 1), (0.74375935555401725663, -1), (0.66051985991510159538, 0), (-0.52514176765645902370, 1)),
    (0.0, 1.9, (0.53193504851347193207, 2), (0.72412218652744441630, 1), (0.51538391710418997615, -2), (-0.63864061213067051716, -2)),
    (0.0, 2.1, (0.61157078235904561158, 2), (0.87274990441805315129, 1), (0.80626992711973547928, -3), (-0.98197129226806317172, -3)),
    (0.0, 5.0, (0.85124599448763896545, 5), (0.76048881695157897497, 5), (0.94492117351490413433, -8), (-0.51771052101787701867, -7)),
    (0.0, 9.9, (0.62523519366602631074, 12), (0.59276325999778952233, 12), (0.64706069514361245167, -15), (-0.67898769185057823922, -15)),
    (0.0, 10.1, (0.75585343525121644681, 12), (0.71739881829294791601, 12), (0.52461677480103947003, -15), (-0.55000048188403039859, -15)),
    (0.0, 14.9, (0.58817973840225067114, 19), (0.56808604198374616729, 19), (0.91335585583967354409, -23), (-0.94352245420180546068, -23)),
    (0.0, 15.1, (0.71354562986451909086, 19), (0.68949807393150636876, 19), (0.74290129749287109356, -23), (-0.76711791419422011414, -23)),
    (0.0, 30.0, (0.71092681339357794943, 40), (0.69897581755772716815, 40), (0.75029881706617100586, -45), (-0.76270289343420947813, -45)),
    (0.0, 60.0, (0.60943328366175763664, 83), (0.60433314988813862863, 83), (0.87516037414362812871, -89), (-0.88242348345654020984, -89)),
    (0.0, 99.0, (0.56967600914567440740, 139), (0.56679151747757207350, 139), (0.56740400015763997227, -145), (-0.57026251233511311025, -145)),
    (0.0, 101.0, (0.52092217929614419940, 142), (0.51833690920329696831, 142), (0.60822053420642539410, -148), (-0.61122414667064210451, -148)),
    (0.0, 150.0, (0.69030460080695768108, 212), (0.68799972460845834122, 212), (0.61808806824709711110, -219), (-0.62014495064226109033, -219)),
    (0.0, 300.0, (0.64570942257213907933, 428), (0.64463234037746892179, 428), (0.66077285595550290731, -436), (-0.66187322935199449631, -436)),
    (0.0, 500.0, (0.72660403001153094488, 716), (0.72587706195062024568, 716), (0.70464824698756869805, -725), (-0.70535254361288810764, -725)),
    (0.1, 0.001, (0.98307447684093736798, -1), (0.76803042606312740082, 6), (0.95919881488164804334, 3), (-0.61868716673234359804, 11)),
    (0.1, 0.05, (0.72727733233422877055, 0), (0.73553961222363967203, 1), (0.79668555692852806853, 2), (-0.65793547017666847346, 5)),
    (0.1, 0.7, (0.52744422787902060501, 1), (0.93947121065534476173, -1), (0.66369455661086559223, 0), (-0.52935002661802963735, 1)),
    (0.1, 1.9, (0.52675908200546755893, 2), (0.73151422119782720009, 1), (0.51650107122918158292, -2), (-0.64052402998939278434, -2)),
    (0.1, 2.1, (0.60702957805597270810, 2), (0.87813397307217355108, 1), (0.80787452198013607200, -3), (-0.98458121666806608079, -3)),
    (0.1, 5.0, (0.85026851215290420227, 5), (0.75986461272807156199, 5), (0.94578771923339659961, -8), (-0.51826532936648318446, -7)),
    (0.1, 9.9, (0.62490144712661933259, 12), (0.59248263672999060496, 12), (0.64737262325622360142, -15), (-0.67934515315841735643, -15)),
    (0.1, 10.1, (0.75545843625098308924, 12), (0.71706537491287270190, 12), (0.52486488164355088249, -15), (-0.55028411205450716522, -15)),
    (0.1, 14.9, (0.58797523292799973036, 19), (0.56790276767818828374, 19), (0.91365278989453268868, -23), (-0.94384852320073599251, -23)),
    (0.1, 15.1, (0.71330094426463379200, 19), (0.68927844307781986560, 19), (0.74313971269240654647, -23), (-0.76737941994035502194, -23)),
    (0.1, 30.0, (0.71080628568485997328, 40), (0.69886140420784728739, 40), (0.75042186416164726179, -45), (-0.76283201182999432572, -45)),
    (0.1, 60.0, (0.60938206864694233668, 83), (0.60428322433966471660, 83), (0.87523271008559064578, -89), (-0.88249761559717883808, -89)),
    (0.1, 99.0, (0.56964709143926271090, 139), (0.56676303978399893446, 139), (0.56743251446672003935, -145), (-0.57029145689555095561, -145)),
    (0.1, 101.0, (0.52089626266013386506, 142), (0.51831137907388876811, 142), (0.60825049738421983031, -148), (-0.61125455304482503599, -148)),
    (0.1, 150.0, (0.69028151378003422098, 212), (0.68797686909717092172, 212), (0.61810860333735142904, -219), (-0.62016569052100154163, -219)),
    (0.1, 300.0, (0.64569864283701750080, 428), (0.64462161461596658842, 428), (0.66078385063892976441, -436), (-0.66188427893317762040, -436)),
    (0.1, 500.0, (0.72659675672582366402, 716), (0.72586981050293633601, 716), (0.70465528647391326869, -725), (-0.70535960420021688812, -725)),
    (0.5, 0.001, (0.80740254161352579327, -5), (0.78847957019712008554, 4), (0.61865092989244755001, 6), (-0.60535960132053948460, 15)),
    (0.5, 0.05, (0.71394703765193221302, -2), (0.89392093888742176028, 1), (0.66645407113821981644, 3), (-0.91637434781505220136, 6)),
    (0.5, 0.7, (0.72342672600457596544, 0), (0.68026413704747782589, 0), (0.74388325232069378655, 0), (-0.63761421627488040533, 1)),
    (0.5, 1.9, (0.94588200324725500163, 1), (0.74025430745937562770, 1), (0.54398085306267189261, -2), (-0.68713370913179608157, -2)),
    (0.5, 2.1, (0.55360119616862148215, 2), (0.87729458013627669852, 1), (0.84727007197562862703, -3), (-0.52450052074681771723, -2)),
    (0.5, 5.0, (0.82742335929872078767, 5), (0.74475615670468888125, 5), (0.96681302390857793524, -8), (-0.53174716314971786438, -7)),
    (0.5, 9.9, (0.61694704767045582673, 12), (0.58578810897524446754, 12), (0.65490288761224813706, -15), (-0.68797879102700814279, -15)),
    (0.5, 10.1, (0.74604272109464937246, 12), (0.70910991563760546686, 12), (0.53085378637696328297, -15), (-0.55713367679166443652, -15)),
    (0.5, 14.9, (0.58308892728953250267, 19), (0.56352218476317141130, 19), (0.92080766166082111757, -23), (-0.95170724762259363755, -23)),
    (0.5, 15.1, (0.70745423593041546415, 19), (0.68402859897918560463, 19), (0.74888423532653982526, -23), (-0.77368172656251796575, -23)),
    (0.5, 30.0, (0.70791981565020833313, 40), (0.69612115205603819424, 40), (0.75338099251181256168, -45), (-0.76593734238700943771, -45)),
    (0.5, 60.0, (0.60815420605688056037, 83), (0.60308625433973988903, 83), (0.87697055783159502901, -89), (-0.88427864581352498758, -89)),
    (0.5, 99.0, (0.56895350819904701678, 139), (0.56608000563238516316, 139), (0.56811728651691726850, -145), (-0.57098656574175018400, -145)),
    (0.5, 101.0, (0.52027465136650621974, 142), (0.51769903428053341667, 142), (0.60897005521248337508, -148), (-0.61198475845610953040, -148)),
    (0.5, 150.0, (0.68972765723738588641, 212), (0.68742856504659460012, 212), (0.61860164978105171981, -219), (-0.62066365528032189221, -219)),
    (0.5, 300.0, (0.64543998323593830150, 428), (0.64436424993054507100, 428), (0.66104777787015431417, -436), (-0.66214952416660457136, -436)),
    (0.5, 500.0, (0.72642221972340395486, 716), (0.72569579750368055090, 716), (0.70482425523127803210, -725), (-0.70552907948650931013, -725)),
    (1.0, 0.001, (0.51200006400000267732, -10), (0.50000018750001302083, 0), (0.97655882632430229830, 10), (-0.95367742714394196990, 20)),
    (1.0, 0.05, (0.80025002604302309031, -5), (0.50046883138614254533, 0), (0.62217732268382829365, 5), (-0.78380414169359780405, 9)),
    (1.0, 0.7, (0.74375935555401725663, -1), (0.59504633576822539309, 0), (0.52514176765645902370, 1), (-0.54023122759053186814, 2)),
    (1.0, 1.9, (0.72412218652744441630, 1), (0.68275315674934152195, 1), (0.63864061213067051716, -2), (-0.85151055506770079036, -2)),
    (1.0, 2.1, (0.87274990441805315129, 1), (0.80754637213806593059, 1), (0.98197129226806317172, -3), (-0.63693765219512086587, -2)),
    (1.0, 5.0, (0.76048881695157897497, 5), (0.69914823109732317046, 5), (0.51771052101787701867, -7), (-0.57600269096102747090, -7)),
    (1.0, 9.9, (0.59276325999778952233, 12), (0.56536011689857282578, 12), (0.67898769185057823922, -15), (-0.71564531048205469560, -15)),
    (1.0, 10.1, (0.71739881829294791601, 12), (0.68482384928161764075, 12), (0.55000048188403039859, -15), (-0.57907226805688406586, -15)),
    (1.0, 14.9, (0.56808604198374616729, 19), (0.55005315840334153331, 19), (0.94352245420180546068, -23), (-0.97667951048409001645, -23)),
    (1.0, 15.1, (0.68949807393150636876, 19), (0.66788350576309482695, 19), (0.76711791419422011414, -23), (-0.79370380836666050628, -23)),
    (1.0, 30.0, (0.69897581755772716815, 40), (0.68762761947498704382, 40), (0.76270289343420947813, -45), (-0.77572224684731132180, -45)),
    (1.0, 60.0, (0.60433314988813862863, 83), (0.59936106449695532617, 83), (0.88242348345654020984, -89), (-0.88986743220123713220, -89)),
    (1.0, 99.0, (0.56679151747757207350, 139), (0.56395084230246660868, 139), (0.57026251233511311025, -145), (-0.57316422755496434712, -145)),
    (1.0, 101.0, (0.51833690920329696831, 142), (0.51579013069017096209, 142), (0.61122414667064210451, -148), (-0.61427225843088719712, -148)),
    (1.0, 150.0, (0.68799972460845834122, 212), (0.68571793597623462548, 212), (0.62014495064226109033, -219), (-0.62222236791804551837, -219)),
    (1.0, 300.0, (0.64463234037746892179, 428), (0.64356064810421418293, 428), (0.66187322935199449631, -436), (-0.66297910005334288896, -436)),
    (1.0, 500.0, (0.72587706195062024568, 716), (0.72515227588762970439, 716), (0.70535254361288810764, -725), (-0.70605895207479447427, -725)),
    (2.7, 0.001, (0.62942643022448886975, -31), (0.82981027669128149803, -20), (0.58842514890433858774, 30), (-0.77575589604877840269, 41)),
    (2.7, 0.05, (0.74265546635207199308, -16), (0.62669395226589006735, -10), (0.99722368078418042788, 14), (-0.84163650375651705795, 20)),
    (2.7, 0.7, (0.93172591680027230648, -6), (0.92033061618523189823, -4), (0.76661346541658003793, 4), (-0.77601532009727635574, 6)),
    (2.7, 1.9, (0.52967576068077836240, -1), (0.88218885072965222192, -1), (0.56710724954350966419, 0), (-0.52139056308922156692, 1)),
    (2.7, 2.1, (0.73047655667758787975, -1), (0.56728549673931141728, 0), (0.79406883303704053433, -1), (-0.68710927872783440989, 0)),
    (2.7, 5.0, (0.77128952665792476114, 4), (0.81778590812983400374, 4), (0.91215984072106643962, -7), (-0.55364976884687927094, -6)),
    (2.7, 9.9, (0.84996401887658596914, 11), (0.84039775366584826155, 11), (0.91788323297839155006, -15), (-0.99389455350778786968, -15)),
    (2.7, 10.1, (0.51787590280568927108, 12), (0.51174045399477350555, 12), (0.73931915199770377615, -15), (-0.79891666553501389074, -15)),
    (2.7, 14.9, (0.91369198171460973643, 18), (0.89845192694665880046, 18), (0.57847097119932971587, -22), (-0.60643756943029965357, -22)),
    (2.7, 15.1, (0.55613390108480901007, 19), (0.54685113309567670327, 19), (0.93818657943602216868, -23), (-0.98277456907545828651, -23)),
    (2.7, 30.0, (0.62832526045827905531, 40), (0.62039142503275697180, 40), (0.84551138280065697782, -45), (-0.86279939567310616919, -45)),
    (2.7, 60.0, (0.57322288459610444136, 83), (0.56901580178394384440, 83), (0.92950301460984270311, -89), (-0.93814252361324644335, -89)),
    (2.7, 99.0, (0.54898106231702770821, 139), (0.54640758109559465607, 139), (0.58857454701494914792, -145), (-0.59175639058414291197, -145)),
    (2.7, 101.0, (0.50236812194276216682, 142), (0.50005621151363866817, 142), (0.63045878623271205512, -148), (-0.63379525943306921227, -148)),
    (2.7, 150.0, (0.67367784956663382082, 212), (0.67153835116636191763, 212), (0.63324024758268019910, -219), (-0.63544945385225857764, -219)),
    (2.7, 300.0, (0.63789860963265751649, 428), (0.63686047729390505767, 428), (0.66883666701486580012, -436), (-0.66997746647024742853, -436)),
    (2.7, 500.0, (0.72132109013471136318, 716), (0.72060994554703516507, 716), (0.70979872646366286518, -725), (-0.71051849915819053501, -725)),
    (10.3, 0.001, (0.58942569353018024587, -135), (0.74109920281270015595, -122), (0.65886084875179018706, 132), (-0.82840170624585759471, 145)),
    (10.3, 0.05, (0.64580941236878686427, -77), (0.51968034266965265515, -69), (0.60133049776151246690, 74), (-0.96777889848137516765, 81)),
    (10.3, 0.7, (0.75811532087222850192, -38), (0.69866163886155761679, -34), (0.51106655748776931299, 35), (-0.94239782742546833099, 38)),
    (10.3, 1.9, (0.72578137223740314005, -23), (0.99878113192212462880, -21), (0.52612389267871928374, 20), (-0.72631922235944675237, 22)),
    (10.3, 2.1, (0.51769549875242731365, -21), (0.64672538431937564702, -19), (0.73490220649262559476, 18), (-0.92158622510645291413, 20)),
    (10.3, 5.0, (0.74833514583592130472, -8), (0.85012529676994572969, -7), (0.93318851054847040663, 4), (-0.53897832075399254590, 6)),
    (10.3, 9.9, (0.90179711251855369828, 4), (0.64006193451553907014, 5), (0.62066310035815661729, -8), (-0.91110955597499084061, -8)),
    (10.3, 10.1, (0.59803706908670370623, 5), (0.84006410419783483981, 5), (0.92688998869597982672, -9), (-0.67346277466369833257, -8)),
    (10.3, 14.9, (0.54694938333689921614, 14), (0.65261124651341626677, 14), (0.80736556728559033283, -18), (-0.99996392858268760173, -18)),
    (10.3, 15.1, (0.69400644871481353519, 14), (0.82454705439344547036, 14), (0.63055446772509835653, -18), (-0.77763084335695503278, -18)),
    (10.3, 30.0, (0.95891954288341471690, 37), (0.99951360237016298836, 37), (0.52606834656768294913, -42), (-0.56402458632720084235, -42)),
    (10.3, 60.0, (0.50087329926381528174, 82), (0.50413102767499932737, 82), (0.52474259178199156044, -87), (-0.53665130816218345731, -87)),
    (10.3, 99.0, (0.66525299788598297960, 138), (0.66551193073134030372, 138), (0.96655197117621029487, -145), (-0.97658699247376856277, -145)),
    (10.3, 101.0, (0.61485659719749927573, 141), (0.61502595355984020694, 141), (0.51264066338759898947, -147), (-0.51780537926123990832, -147)),
    (10.3, 150.0, (0.96835716726271152025, 211), (0.96741947890058510061, 211), (0.87915207689236733459, -219), (-0.88413433752467209252, -219)),
    (10.3, 300.0, (0.54091096980716219811, 428), (0.54032847798303467550, 428), (0.78832936908823252488, -436), (-0.79010511718208414793, -436)),
    (10.3, 500.0, (0.65339975186882065169, 716), (0.65288492647925752046, 716), (0.78342798895663571724, -725), (-0.78437690489228769757, -725)),
    (29.9, 0.001, (0.93745803010727800814, -435), (0.85540756577688092993, -420), (0.57081708126745358327, 430), (-0.52085665099403653014, 445)),
    (29.9, 0.05, (0.78903174543978394324, -266), (0.92156566825739171322, -257), (0.67819363531927597156, 261), (-0.79211011834602959299, 270)),
    (29.9, 0.7, (0.70895074653201734379, -152), (0.94657356042049681273, -147), (0.75459446101086797742, 147), (-0.50376719852041725797, 153)),
    (29.9, 1.9, (0.76486467381563024338, -109), (0.75375302304067278794, -105), (0.69821335313524961893, 104), (-0.68816245711615333828, 108)),
    (29.9, 2.1, (0.95917307397383949645, -105), (0.85558465379384301704, -101), (0.55652171900965458112, 100), (-0.99300016444438125237, 103)),
    (29.9, 5.0, (0.75802418059240941207, -67), (0.57424115824369983350, -64), (0.69625862888428939690, 62), (-0.52792463454077121183, 65)),
    (29.9, 9.9, (0.93699241661774668783, -37), (0.74411146754067954747, -35), (0.54213161639861362650, 32), (-0.86377317089285475013, 33)),
    (29.9, 10.1, (0.87930131903617007920, -36), (0.68581065010427551250, -34), (0.57653908879190949501, 31), (-0.90226763462768895651, 32)),
    (29.9, 14.9, (0.95561988574827923129, -18), (0.53408302989016724750, -16), (0.50115232313932251780, 13), (-0.56352071469980214822, 14)),
    (29.9, 15.1, (0.74540635169202728406, -17), (0.82432069848653883504, -16), (0.64076277088619652815, 12), (-0.71291133076512904134, 13)),
    (29.9, 30.0, (0.55920335595211199139, 20), (0.78488240236329506758, 20), (0.67548412130757474306, -25), (-0.95938456210277283852, -25)),
    (29.9, 60.0, (0.79200848554842791289, 72), (0.87961590748859895418, 72), (0.60270275166730763607, -78), (-0.67741665474889194128, -78)),
    (29.9, 99.0, (0.80695350758351113645, 132), (0.83921397122724921167, 132), (0.76690853306245434966, -139), (-0.80466709820043480028, -139)),
    (29.9, 101.0, (0.80603550933825255348, 135), (0.83694010310388486079, 135), (0.75381475886137349265, -142), (-0.78957927200143001002, -142)),
    (29.9, 150.0, (0.56094904908713817263, 208), (0.57018404361015284167, 208), (0.74594366098653652486, -215), (-0.76300719486589569363, -215)),
    (29.9, 300.0, (0.58136398304793792276, 426), (0.58328415270530354063, 426), (0.73028903080556291371, -434), (-0.73511144004717873585, -434)),
    (29.9, 500.0, (0.59400671851945368147, 715), (0.59447568576568223887, 715), (0.86040648202494833915, -724), (-0.86280045424132023901, -724)),
    (30.0, 0.001, (0.62304321109808005341, -436), (0.57041309640476944766, -421), (0.85601339287003259502, 431), (-0.78370366823913052102, 446)),
    (30.0, 0.05, (0.77545711208608636161, -267), (0.90874002464823547513, -258), (0.68776542694340059093, 262), (-0.80597626770862128378, 271)),
    (30.0, 0.7, (0.90716576005482642155, -153), (0.60763708598998688652, -147), (0.58775151104375175364, 148), (-0.78738884238155673605, 153)),
    (30.0, 1.9, (0.54069884225825462577, -109), (0.53461905599033108386, -105), (0.98440332618072782853, 104), (-0.97346389682019003106, 108)),
    (30.0, 2.1, (0.68486558686762238173, -105), (0.61293533954534687316, -101), (0.77683859778355470347, 100), (-0.69536144289960999497, 104)),
    (30.0, 5.0, (0.58997778424820711249, -67), (0.89678735054146144139, -65), (0.89167650338613490079, 62), (-0.67829315980782696520, 65)),
    (30.0, 9.9, (0.77940619823308673369, -37), (0.62083892020155558153, -35), (0.64978537882047024356, 32), (-0.51920135617157308488, 34)),
    (30.0, 10.1, (0.73281091941994144647, -36), (0.57327966782816683629, -34), (0.68971991625065423362, 31), (-0.54130853256408439293, 33)),
    (30.0, 14.9, (0.82567910851813047192, -18), (0.92541679920927361085, -17), (0.57847089621628771851, 13), (-0.65218898309049718797, 14)),
    (30.0, 15.1, (0.64482220977926257184, -17), (0.71500574431183463322, -16), (0.73874482990267119153, 12), (-0.82409669516106221057, 13)),
    (30.0, 30.0, (0.51165543639258893207, 20), (0.71936468113876782641, 20), (0.73702721144524894231, -25), (-0.52425449194594985788, -24)),
    (30.0, 60.0, (0.75460035244583023506, 72), (0.83863840404159489112, 72), (0.63215956566485736534, -78), (-0.71099009651784789620, -78)),
    (30.0, 99.0, (0.78314325773310539700, 132), (0.81468295021215798615, 132), (0.79000396473183563611, -139), (-0.82912867582082847084, -139)),
    (30.0, 101.0, (0.78270538682886235021, 135), (0.81293773563327682558, 135), (0.77607424633726603083, -142), (-0.81311142465881913834, -142)),
    (30.0, 150.0, (0.54989607990266741774, 208), (0.55902134382414983915, 208), (0.76083980109777846332, -215), (-0.77834278317552737552, -215)),
    (30.0, 300.0, (0.57558889405070349374, 426), (0.57750911184103765636, 426), (0.73759197748728128472, -434), (-0.74248695541358411617, -434)),
    (30.0, 500.0, (0.59045783336162798965, 715), (0.59093107388981689880, 715), (0.86556753279125084321, -724), (-0.86798619539969543191, -724)),
    (30.5, 0.001, (0.64315166781446698514, -444), (0.59863665400848386438, -429), (0.81565545096820286680, 439), (-0.75920078333602464526, 454)),
    (30.5, 0.05, (0.70753494059165462383, -272), (0.84296264706295627998, -263), (0.74143258258566416046, 267), (-0.88334864005758813982, 276)),
    (30.5, 0.7, (0.77420092861779722883, -156), (0.52721315101025257852, -150), (0.67741059119896153450, 151), (-0.92261822162785177372, 156)),
    (30.5, 1.9, (0.75993608752630836730, -112), (0.76386703588835484128, -108), (0.68897130094437509092, 107), (-0.69262286937337108903, 111)),
    (30.5, 2.1, (0.50592423168913462910, -107), (0.92059914900736077251, -104), (0.51722152076995672056, 103), (-0.94130154414990595401, 106)),
    (30.5, 5.0, (0.67074696645228083565, -69), (0.51805864791034825652, -66), (0.77178615457153655354, 64), (-0.59660278510586766031, 67)),
    (30.5, 9.9, (0.61788130201004278809, -38), (0.99922380268604116483, -37), (0.80750594108044615813, 33), (-0.65488505348110424417, 35)),
    (30.5, 10.1, (0.58650135883338727298, -37), (0.93145451487409347101, -36), (0.84905962355412827654, 32), (-0.67629681000462314850, 34)),
    (30.5, 14.9, (0.79168401107660620230, -19), (0.89929856422697332730, -18), (0.59534034253293560846, 14), (-0.68011577922007583856, 15)),
    (30.5, 15.1, (0.62199839829935041910, -18), (0.69896449585423172329, -17), (0.75578779683484419905, 13), (-0.85423662516162793012, 14)),
    (30.5, 30.0, (0.65390566394869310189, 19), (0.92719045817326368835, 19), (0.57190935495928226569, -24), (-0.82029839987818336678, -24)),
    (30.5, 60.0, (0.59112359786941715223, 72), (0.65919996321991930007, 72), (0.80428568466549079393, -78), (-0.90756243677380582363, -78)),
    (30.5, 99.0, (0.67324426600279839863, 132), (0.70136047473996594340, 132), (0.91766627628650713476, -139), (-0.96445594939152827688, -139)),
    (30.5, 101.0, (0.67483643885286543069, 135), (0.70186926195187421172, 135), (0.89890145259161207946, -142), (-0.94306619639145263873, -142)),
    (30.5, 150.0, (0.99464837704834983827, 207), (0.50590683969599006948, 208), (0.84072451888368116529, -215), (-0.86061578906925246589, -215)),
    (30.5, 300.0, (0.54728986836724622860, 426), (0.54920749106732888405, 426), (0.77560201622170162250, -434), (-0.78087850815223968326, -434)),
    (30.5, 500.0, (0.57285718488904775894, 715), (0.57335098247246801499, 715), (0.89210773051251036663, -724), (-0.89465432180733205153, -724)),
    (45.0, 0.001, (0.59594391846267962596, -679), (0.81840442923883770437, -664), (0.59662586436812004411, 674), (-0.81934093943314333475, 689)),
    (45.0, 0.05, (0.58511682588359042345, -425), (0.51426314579434996132, -415), (0.60766554684469330113, 420), (-0.53408138420373548761, 430)),
    (45.0, 0.7, (0.73794763565028822691, -254), (0.74132977131400891185, -248), (0.96351694109143112930, 248), (-0.96793810355596013742, 254)),
    (45.0, 1.9, (0.66517887584626973779, -189), (0.98549801207556689733, -185), (0.53405017617314100576, 184), (-0.79125512112890906611, 188)),
    (45.0, 2.1, (0.94319623199486965630, -183), (0.63227707311816020036, -178), (0.75311758996132982139, 177), (-0.50488111671017598631, 182)),
    (45.0, 5.0, (0.65794624838713354519, -126), (0.74464642429449423898, -123), (0.53709531559320125401, 121), (-0.60803431088615204459, 124)),
    (45.0, 9.9, (0.62071536016184970890, -81), (0.72187179593375814601, -79), (0.55943163271470173000, 76), (-0.65125324201013263030, 78)),
    (45.0, 10.1, (0.77996473649849935417, -80), (0.88993240744560254839, -78), (0.88958129127789420408, 74), (-0.50803014456385283994, 77)),
    (45.0, 14.9, (0.87566682142892087513, -54), (0.69574573906243111863, -52), (0.77090384487459333166, 48), (-0.61378645953527015930, 50)),
    (45.0, 15.1, (0.82356983105328748005, -53), (0.64653230719797974747, -51), (0.81857687043433048724, 47), (-0.64398456129398552849, 49)),
    (45.0, 30.0, (0.59677994572604401473, -3), (0.53641739062751664609, -2), (0.99142249731653656819, -3), (-0.89622716292185996476, -2)),
    (45.0, 60.0, (0.84846323801986884360, 59), (0.52803312843085427762, 60), (0.50286422784718027538, -65), (-0.63126921692498721611, -65)),
    (45.0, 99.0, (0.76027681815555964107, 124), (0.83194940934561680153, 124), (0.77408710850733504557, -131), (-0.85354171629073992414, -131)),
    (45.0, 101.0, (0.84480914643379986568, 127), (0.92137647666549359918, 127), (0.68514076345829734041, -134), (-0.75289685570183020104, -134)),
    (45.0, 150.0, (0.85084027136042064923, 202), (0.88569892256422832700, 202), (0.96063546614819718241, -210), (-0.50293392198856537591, -209)),
    (45.0, 300.0, (0.70753624008751839087, 423), (0.71429761923803752321, 423), (0.59636051438789296262, -431), (-0.60400360219799984320, -431)),
    (45.0, 500.0, (0.76675365955155685323, 713), (0.76909179178324630555, 713), (0.66506256233147996676, -722), (-0.66841003744053734585, -722)),
    (75.2, 0.001, (0.82583347115028576849, -1189), (0.94761164910767128971, -1173), (0.51527569385541121723, 1183), (-0.59125873079527484700, 1199)),
    (75.2, 0.05, (0.55168631424617501840, -764), (0.81028945080632315809, -754), (0.77132930404143838199, 758), (-0.56644508455084686791, 769)),
    (75.2, 0.7, (0.68649336012375110657, -478), (0.57618870384656423354, -471), (0.61983626022521996124, 472), (-0.52024255973147730469, 479)),
    (75.2, 1.9, (0.87244917989530194354, -370), (0.53971086711829005985, -364), (0.97517687589904979607, 363), (-0.60326496235041201874, 369)),
    (75.2, 2.1, (0.79281168986734643287, -359), (0.88753536276946199669, -354), (0.53652849174633505378, 353), (-0.60063814510907798862, 358)),
    (75.2, 5.0, (0.91901623203214321074, -265), (0.86575772585107992081, -261), (0.92401905531558853515, 258), (-0.87052147300803223810, 262)),
    (75.2, 9.9, (0.62958417759039355331, -190), (0.60287814960442834598, -187), (0.67011057199615368822, 184), (-0.64182964056047071585, 187)),
    (75.2, 10.1, (0.71757924453902126345, -188), (0.67376499021319164839, -185), (0.58773216003850605509, 182), (-0.55197507157403759405, 185)),
    (75.2, 14.9, (0.60261705532943011145, -145), (0.77494191734518342104, -143), (0.69267184714999553702, 139), (-0.89118794313027394006, 141)),
    (75.2, 15.1, (0.83741230291010554144, -144), (0.53157589636257353270, -141), (0.99640983552304265987, 137), (-0.63282470976649134744, 140)),
    (75.2, 30.0, (0.62910331904559869287, -66), (0.84819116781225107206, -65), (0.62825587892484695596, 60), (-0.84848635013766100020, 61)),
    (75.2, 60.0, (0.61224141419087820265, 21), (0.97968495869233812925, 21), (0.54329215785473176261, -27), (-0.87287710215936049226, -27)),
    (75.2, 99.0, (0.71901945237649111008, 99), (0.90063213417228090431, 99), (0.71595935827601768223, -106), (-0.90138491519584511894, -106)),
    (75.2, 101.0, (0.54531535859217777140, 103), (0.67813258563319225846, 103), (0.93203699857174310396, -110), (-0.58249053773773904843, -109)),
    (75.2, 150.0, (0.82349981323419022538, 185), (0.91899871819430976585, 185), (0.92633566160617962429, -193), (-0.51934764725299179907, -192)),
    (75.2, 300.0, (0.88227358167599349837, 414), (0.90818531322369365521, 414), (0.93817344802220047984, -423), (-0.96866928543070327537, -423)),
    (75.2, 500.0, (0.65425903985757080270, 708), (0.66097731413531153310, 708), (0.77386149601614697543, -717), (-0.78332139967386759272, -717)),
    (120.0, 0.001, (0.76962312053244305316, -1976), (0.70461101125391712406, -1959), (0.69297987428683432571, 1969), (-0.63444202360024869917, 1986)),
    (120.0, 0.05, (0.92336584094180644833, -1299), (0.54103471900351405909, -1287), (0.57759694303813892222, 1292), (-0.67687147687276539633, 1303)),
    (120.0, 0.7, (0.85205474701964886513, -842), (0.57058200258292342384, -834), (0.62592721973113365615, 835), (-0.83830976596184994205, 842)),
    (120.0, 1.9, (0.78296987036026285493, -669), (0.77276368066655346435, -663), (0.68108174988212456060, 662), (-0.67220509881366239636, 668)),
    (120.0, 2.1, (0.98363997708110767654, -652), (0.87838334018379129644, -646), (0.54212078827550880690, 645), (-0.96822230630664142140, 650)),
    (120.0, 5.0, (0.58326086978143605810, -501), (0.87564416383206658603, -497), (0.91360653179372454981, 494), (-0.68580442632449691647, 499)),
    (120.0, 9.9, (0.81206383468398816184, -383), (0.61727273932242748802, -379), (0.65453896666402999490, 376), (-0.99512311687188126517, 379)),
    (120.0, 10.1, (0.56415032284314779055, -379), (0.84078508657012846190, -376), (0.94204343732333551809, 372), (-0.70203127674101543367, 376)),
    (120.0, 14.9, (0.89857647121479115354, -312), (0.91149707316489831023, -309), (0.58900797067242088993, 305), (-0.59755232772909743431, 308)),
    (120.0, 15.1, (0.56326138037082737963, -309), (0.56390754321257290322, -306), (0.93945752114005842330, 302), (-0.94065647809749933059, 305)),
    (120.0, 30.0, (0.50203620730069989099, -188), (0.51736494520349230839, -186), (0.51530985650212128657, 182), (-0.53129649571576233135, 184)),
    (120.0, 60.0, (0.85301061121323661406, -61), (0.95298797766905390671, -60), (0.55922615894565074489, 54), (-0.62570248643717678718, 55)),
    (120.0, 99.0, (0.59079914562988465414, 43), (0.92716591723575195904, 43), (0.69634051661939163944, -50), (-0.54782247394698528204, -49)),
    (120.0, 101.0, (0.83629034556945072758, 47), (0.64849914947046479304, 48), (0.97583129768906709591, -55), (-0.75870894535222694454, -54)),
    (120.0, 150.0, (0.56346181830217261278, 146), (0.72043938618572828049, 146), (0.59129124028812076937, -153), (-0.75842554232128326768, -153)),
    (120.0, 300.0, (0.54772838292145787002, 394), (0.58913436798403295444, 394), (0.72326027648548830743, -402), (-0.78001407409146846191, -402)),
    (120.0, 500.0, (0.89641030895899179073, 695), (0.92101761333999956190, 695), (0.55539573294500724526, -704), (-0.57169216201775489916, -704)),
    (200.0, 0.001, (0.68902871362759326935, -3438), (0.52568718996899663077, -3420), (0.92884372934551963610, 3430), (-0.70865152691435890796, 3448)),
    (200.0, 0.05, (0.58799608290829211403, -2309), (0.57421494257007039979, -2297), (0.54422129551781358902, 2302), (-0.53146612559588931590, 2314)),
    (200.0, 0.7, (0.81548917299830840664, -1548), (0.91014971317454548255, -1540), (0.78480021700955709359, 1540), (-0.87589849112851543224, 1548)),
    (200.0, 1.9, (0.88629221894380737561, -1260), (0.72889145807636295213, -1253), (0.72207688113920998308, 1252), (-0.59384015447838036267, 1259)),
    (200.0, 2.1, (0.81522584877660280695, -1231), (0.60660012150941019000, -1224), (0.78501524822314577451, 1223), (-0.58412108514059558840, 1230)),
    (200.0, 5.0, (0.51762111932738781121, -980), (0.64722755799964162837, -975), (0.61801969126003940926, 973), (-0.77276720267875636625, 978)),
    (200.0, 9.9, (0.60752420170109367302, -783), (0.76801053717494969648, -779), (0.52608384714959747665, 776), (-0.66506464911363909173, 780)),
    (200.0, 10.1, (0.52092930160910481131, -777), (0.64553197058261354545, -773), (0.61350499522030159139, 770), (-0.76026078427651243756, 774)),
    (200.0, 14.9, (0.69048419600256793425, -665), (0.58086262032250541965, -661), (0.92432417633898532404, 657), (-0.77759946334528888803, 661)),
    (200.0, 15.1, (0.62575749771010139343, -661), (0.51947816823302698165, -657), (0.50992887749539409268, 654), (-0.84666793849781168634, 657)),
    (200.0, 30.0, (0.76213952460598318168, -462), (0.64218681156883491399, -459), (0.83045043567634208573, 454), (-0.69982244981910435284, 457)),
    (200.0, 60.0, (0.65422914561075071993, -257), (0.56908400950598288096, -255), (0.93699326315406516846, 249), (-0.81536994670708065636, 251)),
    (200.0, 99.0, (0.75018174731455823504, -102), (0.84514152188486551828, -101), (0.76458152162067333027, 94), (-0.86212401788891119482, 95)),
    (200.0, 101.0, (0.51212007342397373097, -95), (0.56778025647879232535, -94), (0.55776509813972462436, 88), (-0.61894733737086816385, 89)),
    (200.0, 150.0, (0.64732881834921642262, 39), (0.53905313996207902513, 40), (0.79094144195480155090, -47), (-0.65959347617229396337, -46)),
    (200.0, 300.0, (0.58228594462116454151, 335), (0.69914899420206232913, 335), (0.60967983447054652068, -343), (-0.73344770593050615596, -343)),
    (200.0, 500.0, (0.71337789111021215333, 659), (0.76771643333294415209, 659), (0.66637910492666107331, -668), (-0.71828664261048719625, -668)),
];
