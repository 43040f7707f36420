#pragma once
// Generated by tests/oracle/generate.py; do not edit.
#include <array>
#include <vector>

namespace oracle {

struct Case {
  std::vector<const char*> m;  // normalized m_0..m_11
  std::vector<const char*> u;  // u_0..u_N
  std::vector<const char*> b;  // b_0..b_N
};

inline const Case quartic_tm1{
    {"1.0", "0.0", "1.665490974256760144956343966093945157775509873507303701939305228786066", "0.0", "4.330981948513520289912687932187890315551019747014607403878610457572132", "0.0", "1.365843681979732101469440776265761610442856911455112591357513660150246e+1", "0.0", "4.897178338216224347895225518625468378661223696417528884654332549086559e+1", "0.0", "1.935526245029057340607653647111126803042244577302084590881126071922484e+2", "0.0"},
    {"0.0", "1.665490974256760144956343966093945157775509873507303701939305228786066", "9.349325737881391741850813509779252259133788541072267294737612325035946e-1", "1.538768149915140866287210886611089562140100024540074313619585367386298", "1.475910723716815273109943130453527381896287148796142810631047868727517", "1.695512153320352058471440203816647464625241229137477646264881246002855", "1.77753858585085133366192831537243650581743403798101105619512585384925", "1.902403412856664027145406615073715627007658632980552140322046883102051", "1.99961405795911171228829262506245475260695979435477988790333258531061"},
    {"0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0"}};
inline const Case quartic_t0{
    {"1.0", "0.0", "6.759782400672847289954476846708057482872834549154059519768629140054974e-1", "0.0", "1.0", "0.0", "2.027934720201854186986343054012417244861850364746217855930588742016492", "0.0", "5.0", "0.0", "1.419554304141297930890440137808692071403295255322352499151412119411545e+1", "0.0"},
    {"0.0", "6.759782400672847289954476846708057482872834549154059519768629140054974e-1", "8.033593195270347171599629941930540349501656431135853133512835085098e-1", "1.01020846468964459563694033184236644628883361881909002960927697218528", "1.156116300663422642192660983536615760176792151542648942851572734644514", "1.293534764094489940767781038184374507939423481944220430136242145033399", "1.415726301810304923088624375437195806356525557330280146469812874461704", "1.528846252104154646815588550662130671635197448086968153941794952237725", "1.634043504021963890406856658976570198702240024802530223307347919328186"},
    {"0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0"}};
inline const Case quartic_t1{
    {"1.0", "0.0", "3.451294981469098691543348439234669832808115910298664508546639408103754e-1", "0.0", "3.097410037061802616913303121530660334383768179402670982906721183792493e-1", "0.0", "4.159064870283690840803439074642688829656811372090651559826475856726275e-1", "0.0", "7.168920444741631402959637458367924012605218152832051794880654205509916e-1", "0.0", "1.477561320250257307970479860576297378238724329897045732902402258606409", "0.0"},
    {"0.0", "3.451294981469098691543348439234669832808115910298664508546639408103754e-1", "5.52333643570214724382521484584018253183499899416167909546396422080264e-1", "7.235366349255823044974302218859631079173810152582710081301233722380452e-1", "8.7042979144960123843443303239981312491593416409987639926819837536084e-1", "1.001464519684759567989912806615653800545540787856821389406791648349945", "1.120793798848703952257955814251400307154959866390421839696105271293477", "1.231090358237668844823839195061082363528280922071253249833445535450134", "1.334132269864321462321424891534997616796303897764428681714638735456816"},
    {"0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0"}};
inline const Case cubic_t1{
    {"1.0", "1.897182455556365995597504674520626305880044635462451167247680991955252e-2", "-1.0", "-1.018971824555563659955975046745206263058800446354624511672476809919553", "9.62056350888872680088049906509587473882399107290750976655046380160895e-1", "4.018971824555563659955975046745206263058800446354624511672476809919553", "3.113830947333381959735850280471237578352802678127747070034860859517315", "-8.829253578999927060396224579293143632470795982808379394947708710724027", "-2.722766189466676391947170056094247515670560535625549414006972171903463e+1", "-1.296756305233374665775472738400551941599882276408585009529631730589718e+1", "9.786169052666618040264149719528762421647197321872252929965139140482685e+1", "2.580165201043346219330000324324877958263492709703852973559238127772089e+2"},
    {"0.0", "-1.000359930126967088263612192934161923811712481867549471667871251234877", "-9.613505312462184996390814693935355964180615782799573172263066325221826e-1", "-1.248073655283356366448105822482908400330662747474383900572652366903054", "-1.452253817281867799735442112134380955232867044019750665980052503181612", "-1.651329206916072395271779403910900685750909535011915123255256449486531", "-1.83714686674366065658032651190620555822355958555072055431898689502259", "-2.013694041236585302645785225925211669210842051224457306884815658080935", "-2.182374110466823348565082457601948909242827610611028251503977674666358"},
    {"1.897182455556365995597504674520626305880044635462451167247680991955252e-2", "9.806683748205534887726407063631611120349278790169818094194069902542792e-1", "1.099738235458590784959332519627649044703318656354853242944427419045497", "1.303966054989632069518650330446992830642717485415123198584528419715219", "1.450373408539311367020169734609515612994057185559662305273462804803011", "1.577490435362361571694981468200106408006751457315832564712100312642052", "1.688443338694030904679500959712149570605519067168224124376529741234174", "1.787755059202297055888220418876218882176767810373550618248653328100034", "1.877977576477087179506619556554567652922908128150383926371460482420145"}};
inline const Case maxwell_r1_th{
    {"1.0", "1.200904557870398419059026262016117064583520586679268094914778225694814", "1.600452278935199209529513131008058532291760293339634047457389112847407", "2.351582976273197233353295958528204863021161026688719166100861894965925", "3.77624376707179782620616111027216096380234080668399363050782006033037", "6.566740115017492589339185603200548740235252750059069194913022932944442", "1.22605183824509425399347801738885523985034877683927963228791097524974e+1", "2.439354488494694804989683831030599558532220250104814830550036006614129e+1", "5.13887357997510053006787614459063842763221731990066556518970846436436e+1", "1.140094127128476194299892878150252055747298942595326016356617205525871e+2", "2.65161295585284940118594774516432532998331408122703282466315563362229e+2", "6.440077621638646149977112569875655325384552327910159750125288042721456e+2"},
    {"0.0", "1.582805218213021040647591430319442604040337433743112138886675234686858e-1", "3.085028736140382336278435786783696543480789972798600382958777210865995e-1", "4.590392019715191758506972559464457282234241125088619238474084217509481e-1", "6.107504206588763704219770931158619738317335326460167845611594130401988e-1", "7.635661187406990827392984163654214225891061958135983302713067282470845e-1", "9.173202048903927173217260710334877612363763854077294457794927085367363e-1", "1.071864237242486412183879374653680581914767433141232360631270221487545", "1.227078733851868985570660049540836498806540697588227016339526523394206"},
    {"1.200904557870398419059026262016117064583520586679268094914778225694814", "1.513216768636586640806114888049393177673282489463846008953405681690933", "1.764911853678108424920228058122993656500537644849791921029493892037215", "1.979945194903469898281375205761903991556971117939366456066573422725927", "2.170464386704534687044791510460588746625145110931649950402953217227243", "2.343230440340696985044537446384224434402722760404623371825684755270426", "2.502402174982771781308126676532253091852922262055612911664089353857129", "2.650740933317388288798074417207288277758900351675108476266809391836275", "2.790187458608343102411760686128951823607929913577597692372576579915121"}};
inline const Case maxwell_r0_t0{
    {"1.0", "5.641895835477562869480794515607725858440506293289988568440857217106425e-1", "5.0e-1", "5.641895835477562869480794515607725858440506293289988568440857217106425e-1", "7.5e-1", "1.128379167095512573896158903121545171688101258657997713688171443421285", "1.875", "3.385137501286537721688476709364635515064303775973993141064514330263855", "6.5625", "1.354055000514615088675390683745854206025721510389597256425805732105542e+1", "2.953125e+1", "6.77027500257307544337695341872927103012860755194798628212902866052771e+1"},
    {"0.0", "1.816901138162093284622324732549712759310807085190871025046653118822064e-1", "3.413251289594391985641717805647559656286499262166466699045172109774486e-1", "5.049621529880016319357511554175469184878733409312474139624631407160901e-1", "6.702641946396190856785083910947038656626097150774211332045202369627498e-1", "8.361704992803110155488235278007711451712013795989251402769862698903726e-1", "1.002347851011010842224538200047092505265125300843411515964981805845809", "1.168671164744272743814785144447531621132443836963115715856847998117758", "1.335082922242335357979877942164387283499627963654063785104679378773834"},
    {"5.641895835477562869480794515607725858440506293289988568440857217106425e-1", "9.884253928468002854870633587887940211537091845325290879431382329880075e-1", "1.285967619363939960282788726007205660650651458432012100854780278628376", "1.52472084408011530351300227637957336830461375970924872385239167541148", "1.730192274309439256771561398000205346732427685594732212717685638582286", "1.913499843143102570718674453114612334613891392601535893883320184504357", "2.080620336400833224817622224131640274592714741555091743191584473124015", "2.235228380504639149658317295081098499387148008774859864469710955777695", "2.379782443504637420940535045858035506118726430004423992188449713156137"}};
inline const Case sextic_t0{
    {"1.0", "0.0", "3.184249421589871533264438631610209795975713067576368587283873181931561e-1", "0.0", "2.027888875779086283574258066189085082428597228495974707614980458299299e-1", "0.0", "1.666666666666666666666666666666666666666666666666666666666666666666667e-1", "0.0", "1.59212471079493576663221931580510489798785653378818429364193659096578e-1", "0.0", "1.689907396482571902978548388490904235357164357079978923012483715249416e-1", "0.0"},
    {"0.0", "3.184249421589871533264438631610209795975713067576368587283873181931561e-1", "3.184249421589871533264438631610209795975713067576368587283873181931561e-1", "3.700457901796022214380828886976615673103919712435746119388133007374606e-1", "4.075497762556836167742305613924226128667673894933703884298946793821155e-1", "4.374993137047087350835141197678660076068006375542914079925880071656194e-1", "4.649136657302786581781872791627925511456960078665810071235666799781081e-1", "4.891786790553408285514879474681127574370778281059570128830113965216767e-1", "5.113105783512013584749244971820526609581140331522581277961604799313648e-1"},
    {"0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0"}};
inline const Case sextic_th{
    {"1.0", "0.0", "2.722255327142025405344510427064810143266740375673359595800904622854593e-1", "0.0", "1.579150701559487351901679154146004204846275398760150333584951721862157e-1", "0.0", "1.212957445476329099109248262155864976122209937387773400699849229524235e-1", "0.0", "1.097935879977764810688642021174737704158990954709988075636293691116937e-1", "0.0", "1.113799343720184610066524584762359341351527842735496377870818229964425e-1", "0.0"},
    {"0.0", "2.722255327142025405344510427064810143266740375673359595800904622854593e-1", "3.078635889103172741225286765629994747982321637150511832362682401446818e-1", "3.542718294077434237321420870818560497445257517318239225020432406976963e-1", "3.936959945735145152328169624381480665524678865640983084638121160939259e-1", "4.249353064743425888954885953371984355838826567324334282009298200086665e-1", "4.529177415457232775281253084544207644437372920117143466809403680500724e-1", "4.778256096484859246548571685613713109267947100299189640835938400721642e-1", "5.004436619916978939887621272391000338612254938322414768481133991870507e-1"},
    {"0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0", "0.0"}};
inline const Case genjacobi{
    {"1.0", "5.059563590717613206951585108554903290444033445236404082242296470085644e-1", "3.602567493671540605812003704810232953970156755275973736853488285396126e-1", "2.863803595420139503146997338910383900449480846677875160171461633424253e-1", "2.406215145860385991610030714072152319145695090716653192807492462671453e-1", "2.090760107749965057868288569002406416053798638036353965811528820939193e-1", "1.858166821853944507751943172850436227295936455531194420301047574663694e-1", "1.678538081068724095148865036452676954700685507086363716605673823802314e-1", "1.535024862163284630305152231236178101827696220903251725639266079343367e-1", "1.41735001619009491200144395012673711105965170997275321342369944134004e-1", "1.318860790839568801084147085255954824671278660529148914095761914175068e-1", "1.235045881192500568083723047983299122228064618344768324651337112078138e-1"},
    {"0.0", "1.04264912082000986504143185172498186131285158748645682065978630455334e-1", "6.607138268612513264014206262906851712964713288853052932417404236707215e-2", "6.390533930771910727578807749223269194030162058001806129347446140434122e-2", "6.324372935471690703310406357712582898575041167259816291365117685144845e-2", "6.29598338092345426629275092203646475077213049385974802907043411615427e-2", "6.281238454078507250907560051401884293855111673063882637817453046462659e-2", "6.272604650644019362963742519273770431151586625205650876459128074367178e-2", "6.26711536573020745888402908206684488693301931731953378933712434294692e-2"},
    {"5.059563590717613206951585108554903290444033445236404082242296470085644e-1", "4.925211174095355650050348067603833934815282144489756084484723488777994e-1", "5.004130391107164956001483906943382610654595271753356434920981172331362e-1", "5.003567344446224777211968045752483443871727313039368137561610806508027e-1", "5.002433439972451635009791469377098784466091282974413783012089625265083e-1", "5.001720383805347008281526810843990476297998756848893805125703628542101e-1", "5.00127126642377460190765849053308134176450341427616554108231437421122e-1", "5.000974826984791515881771189225553499613244687978530774792838634969482e-1", "5.000770151681806744195706967306826247098959230071237101290035570677525e-1"}};
inline const char* quartic_t0_m2 = "6.759782400672847289954476846708057482872834549154059519768629140054974e-1";
inline const char* cubic_t1_m1 = "1.897182455556365995597504674520626305880044635462451167247680991955252e-2";

// u_nu ~ sum c_k t^{-(2k+1)}, nu = 1/2, as exact fractions.
inline const std::array<std::array<long long, 2>, 8> fractional_half{{
    {1, 4},
    {-3, 32},
    {21, 128},
    {-783, 2048},
    {11871, 8192},
    {-409779, 65536},
    {9476973, 262144},
    {-1909991583, 8388608},
}};

}  // namespace oracle
