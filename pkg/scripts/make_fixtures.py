"""Regenerate the bundled desk-scale fixture under src/apiexpand/fixtures/.

Writes qa_threads.jsonl (raw Q&A records), code_corpus.jsonl ({id, code})
and eval_queries.jsonl ({id, query, gt_api, gt_code_ids}). Output is fully
determined by SEED.

    python scripts/make_fixtures.py
"""
import html
import json
import random
from pathlib import Path

SEED = 20180315
OUT = Path(__file__).resolve().parent.parent / "src" / "apiexpand" / "fixtures"

GRAYSCALE_LISTING = """BufferedImage master = ImageIO.read(new URL(
    "http://www.java2s.com/style/download.png"));
BufferedImage gray = new BufferedImage(master.getWidth(),
    master.getHeight(), BufferedImage.TYPE_INT_ARGB);

ColorConvertOp op = new ColorConvertOp(
    ColorSpace.getInstance(ColorSpace.CS_GRAY), null);
op.filter(master, gray);

ImageIO.write(master,"png",new File("path/to/master"));
ImageIO.write(gray,"png", new File("path/to/gray/image"));"""

TOPICS = [
    {
        "key": "grayscale",
        "query": "Convert image to grayscale without losing transparency",
        "gt_api": ["BufferedImage", "ColorConvertOp", "ColorSpace"],
        "titles": [
            "Convert image to grayscale without losing transparency",
            "How to convert a colour image to grayscale in Java",
            "Grayscale conversion loses alpha channel transparency",
            "Convert BufferedImage to grayscale keeping transparency",
        ],
        "q_prose": [
            "I am trying to convert a colour image to grayscale but the transparent pixels become black.",
            "When I convert my png image to grayscale the transparency is lost.",
            "What is the best way to make an image grayscale while keeping the alpha channel?",
        ],
        "a_prose": [
            "Use a ColorConvertOp with the gray ColorSpace and write to an ARGB BufferedImage so transparency is kept.",
            "Create a BufferedImage of type TYPE_INT_ARGB and filter the source image with ColorConvertOp.",
            "The gray color space conversion keeps alpha if the destination image supports transparency.",
        ],
        "snippets": [
            GRAYSCALE_LISTING,
            """BufferedImage src = ImageIO.read(new File("input.png"));
ColorConvertOp op = new ColorConvertOp(ColorSpace.getInstance(ColorSpace.CS_GRAY), null);
BufferedImage gray = op.filter(src, null);
ImageIO.write(gray, "png", new File("gray.png"));""",
            """BufferedImage image = ImageIO.read(file);
BufferedImage result = new BufferedImage(image.getWidth(), image.getHeight(), BufferedImage.TYPE_BYTE_GRAY);
Graphics2D g = result.createGraphics();
g.drawImage(image, 0, 0, null);
g.dispose();""",
            """ColorSpace cs = ColorSpace.getInstance(ColorSpace.CS_GRAY);
ColorConvertOp grayOp = new ColorConvertOp(cs, null);
BufferedImage dest = new BufferedImage(w, h, BufferedImage.TYPE_INT_ARGB);
grayOp.filter(source, dest);""",
            """BufferedImage img = ImageIO.read(new File(path));
for (int y = 0; y < img.getHeight(); y++) {
    for (int x = 0; x < img.getWidth(); x++) {
        Color c = new Color(img.getRGB(x, y), true);
        int lum = (int) (0.3 * c.getRed() + 0.59 * c.getGreen() + 0.11 * c.getBlue());
        img.setRGB(x, y, new Color(lum, lum, lum, c.getAlpha()).getRGB());
    }
}""",
        ],
    },
    {
        "key": "readfile",
        "query": "Read a text file line by line",
        "gt_api": ["BufferedReader", "FileReader", "Files"],
        "titles": [
            "How to read a text file line by line in Java",
            "Read large text file line by line efficiently",
            "Reading lines from a file into a list",
            "Best way to read a file line by line",
        ],
        "q_prose": [
            "I need to read a large text file line by line and process every line.",
            "How do I read each line of a text file without loading it all in memory?",
        ],
        "a_prose": [
            "Wrap a FileReader in a BufferedReader and call readLine until it returns null.",
            "Since Java 8 you can use Files.lines or Files.readAllLines with a Path.",
        ],
        "snippets": [
            """try (BufferedReader br = new BufferedReader(new FileReader(file))) {
    String line;
    while ((line = br.readLine()) != null) {
        process(line);
    }
}""",
            """List<String> lines = Files.readAllLines(Paths.get("data.txt"), StandardCharsets.UTF_8);
for (String line : lines) {
    System.out.println(line);
}""",
            """try (Stream<String> stream = Files.lines(Paths.get(fileName))) {
    stream.forEach(System.out::println);
}""",
            """Scanner scanner = new Scanner(new File("input.txt"));
while (scanner.hasNextLine()) {
    String line = scanner.nextLine();
}
scanner.close();""",
            """BufferedReader reader = new BufferedReader(new InputStreamReader(new FileInputStream(f), "UTF-8"));
String text = reader.readLine();
reader.close();""",
        ],
    },
    {
        "key": "gzip",
        "query": "Decompress a GZip file",
        "gt_api": ["GZIPInputStream", "FileInputStream", "FileOutputStream"],
        "titles": [
            "How do I decompress a GZip file in Java",
            "Unzip a gz file to disk",
            "Read compressed gzip data from a file",
            "Decompress gzip stream and write output file",
        ],
        "q_prose": [
            "I have a gz compressed file and want to decompress it to a normal file.",
            "How can I read gzip compressed data and write the decompressed bytes?",
        ],
        "a_prose": [
            "Wrap a FileInputStream in a GZIPInputStream and copy the bytes to a FileOutputStream.",
            "GZIPInputStream decompresses the data while you read from it.",
        ],
        "snippets": [
            """GZIPInputStream gzis = new GZIPInputStream(new FileInputStream(gzipFile));
FileOutputStream out = new FileOutputStream(outputFile);
byte[] buffer = new byte[1024];
int len;
while ((len = gzis.read(buffer)) > 0) {
    out.write(buffer, 0, len);
}
gzis.close();
out.close();""",
            """try (GZIPInputStream in = new GZIPInputStream(new FileInputStream(source));
     FileOutputStream out = new FileOutputStream(target)) {
    in.transferTo(out);
}""",
            """GZIPOutputStream gzos = new GZIPOutputStream(new FileOutputStream("data.gz"));
gzos.write(bytes);
gzos.finish();""",
            """InputStream fileStream = new FileInputStream(path);
InputStream gzipStream = new GZIPInputStream(fileStream);
Reader decoder = new InputStreamReader(gzipStream, "UTF-8");
BufferedReader buffered = new BufferedReader(decoder);""",
        ],
    },
    {
        "key": "httpget",
        "query": "Send HTTP GET request and read response",
        "gt_api": ["HttpURLConnection", "URL", "InputStreamReader"],
        "titles": [
            "How to send an HTTP GET request in Java",
            "Read response body of HTTP GET request",
            "Send GET request with HttpURLConnection",
            "Simple HTTP client request and response code",
        ],
        "q_prose": [
            "I want to send a GET request to a web server and read the response body.",
            "How can I make an http request and get the response code?",
        ],
        "a_prose": [
            "Open a HttpURLConnection from a URL, set the request method to GET and read the input stream.",
            "Read the response with an InputStreamReader wrapped in a BufferedReader.",
        ],
        "snippets": [
            """URL url = new URL("http://example.com/api");
HttpURLConnection con = (HttpURLConnection) url.openConnection();
con.setRequestMethod("GET");
int status = con.getResponseCode();
BufferedReader in = new BufferedReader(new InputStreamReader(con.getInputStream()));
String inputLine;
StringBuilder content = new StringBuilder();
while ((inputLine = in.readLine()) != null) {
    content.append(inputLine);
}
in.close();
con.disconnect();""",
            """HttpClient client = HttpClient.newHttpClient();
HttpRequest request = HttpRequest.newBuilder().uri(URI.create(address)).GET().build();
HttpResponse<String> response = client.send(request, HttpResponse.BodyHandlers.ofString());""",
            """URLConnection connection = new URL(target).openConnection();
connection.setRequestProperty("Accept-Charset", "UTF-8");
InputStream response = connection.getInputStream();""",
            """HttpURLConnection conn = (HttpURLConnection) new URL(endpoint).openConnection();
conn.setConnectTimeout(5000);
conn.setReadTimeout(5000);
System.out.println(conn.getResponseCode());""",
        ],
    },
    {
        "key": "xml",
        "query": "Parse an XML file and read element values",
        "gt_api": ["DocumentBuilderFactory", "DocumentBuilder", "NodeList"],
        "titles": [
            "How to parse an XML file in Java",
            "Read element values from XML document with DOM parser",
            "Parse XML and iterate over nodes",
            "Get attribute of XML element",
        ],
        "q_prose": [
            "I need to parse an xml file and read the values of some elements.",
            "How do I iterate over the child nodes of an xml document?",
        ],
        "a_prose": [
            "Use DocumentBuilderFactory to create a DocumentBuilder, parse the file and call getElementsByTagName.",
            "The NodeList returned by the parser lets you read each Element and its text content.",
        ],
        "snippets": [
            """DocumentBuilderFactory factory = DocumentBuilderFactory.newInstance();
DocumentBuilder builder = factory.newDocumentBuilder();
Document doc = builder.parse(new File("config.xml"));
doc.getDocumentElement().normalize();
NodeList nodes = doc.getElementsByTagName("item");
for (int i = 0; i < nodes.getLength(); i++) {
    Element element = (Element) nodes.item(i);
    System.out.println(element.getTextContent());
}""",
            """SAXParserFactory spf = SAXParserFactory.newInstance();
SAXParser parser = spf.newSAXParser();
parser.parse(input, new DefaultHandler());""",
            """XPath xpath = XPathFactory.newInstance().newXPath();
NodeList list = (NodeList) xpath.evaluate("//book/title", document, XPathConstants.NODESET);""",
            """Element root = document.getDocumentElement();
NodeList children = root.getChildNodes();
Node first = children.item(0);
String name = ((Element) first).getAttribute("name");""",
        ],
    },
    {
        "key": "dateformat",
        "query": "Format a date as a string with a custom pattern",
        "gt_api": ["SimpleDateFormat", "Date", "DateTimeFormatter"],
        "titles": [
            "How to format a date as string in Java",
            "Convert Date to String with custom pattern",
            "Format current date and time as yyyy-MM-dd",
            "Parse and format date strings",
        ],
        "q_prose": [
            "I want to format the current date as a string like 2018-03-15.",
            "How do I convert a date object to a string with my own pattern?",
        ],
        "a_prose": [
            "Use SimpleDateFormat with the pattern and call format on the Date.",
            "With java.time use DateTimeFormatter.ofPattern and LocalDate.format.",
        ],
        "snippets": [
            """SimpleDateFormat sdf = new SimpleDateFormat("yyyy-MM-dd HH:mm:ss");
String formatted = sdf.format(new Date());
System.out.println(formatted);""",
            """DateTimeFormatter formatter = DateTimeFormatter.ofPattern("dd/MM/yyyy");
String text = LocalDate.now().format(formatter);""",
            """Calendar cal = Calendar.getInstance();
cal.add(Calendar.DATE, 1);
Date tomorrow = cal.getTime();""",
            """DateFormat df = new SimpleDateFormat("MM/dd/yyyy");
Date parsed = df.parse(input);
String output = new SimpleDateFormat("yyyy-MM-dd").format(parsed);""",
        ],
    },
    {
        "key": "sortlist",
        "query": "Sort a list of objects by a field",
        "gt_api": ["Collections", "Comparator", "List"],
        "titles": [
            "How to sort a list of objects by a property",
            "Sort ArrayList of custom objects by field",
            "Sort list by multiple fields with comparator",
            "Sorting objects by date field in descending order",
        ],
        "q_prose": [
            "I have a list of person objects and want to sort them by age.",
            "How can I sort an ArrayList of custom objects by one of their fields?",
        ],
        "a_prose": [
            "Use Collections.sort with a Comparator, or list.sort with Comparator.comparing.",
            "Implement Comparable in your class or pass a Comparator to the sort method.",
        ],
        "snippets": [
            """Collections.sort(people, new Comparator<Person>() {
    @Override
    public int compare(Person a, Person b) {
        return Integer.compare(a.getAge(), b.getAge());
    }
});""",
            """List<Person> sorted = new ArrayList<>(people);
sorted.sort(Comparator.comparing(Person::getName).thenComparing(Person::getAge));""",
            """people.sort(Comparator.comparing(Person::getBirthday).reversed());""",
            """public class Person implements Comparable<Person> {
    public int compareTo(Person other) {
        return name.compareTo(other.name);
    }
}""",
        ],
    },
    {
        "key": "md5",
        "query": "Generate MD5 hash of a string",
        "gt_api": ["MessageDigest", "BigInteger"],
        "titles": [
            "How to generate an MD5 hash of a string in Java",
            "Compute SHA-256 hash of text",
            "Convert MD5 digest bytes to hex string",
            "Hash a password with MessageDigest",
        ],
        "q_prose": [
            "I need to compute the md5 hash of a string and print it as hex.",
            "How do I convert the digest bytes to a hexadecimal string?",
        ],
        "a_prose": [
            "Get a MessageDigest instance for MD5, digest the bytes and convert them with BigInteger.",
            "Use String.format or BigInteger toString(16) to produce the hex representation.",
        ],
        "snippets": [
            """MessageDigest md = MessageDigest.getInstance("MD5");
byte[] digest = md.digest(text.getBytes(StandardCharsets.UTF_8));
String hash = new BigInteger(1, digest).toString(16);""",
            """MessageDigest sha = MessageDigest.getInstance("SHA-256");
byte[] hashed = sha.digest(password.getBytes("UTF-8"));
StringBuilder hex = new StringBuilder();
for (byte b : hashed) {
    hex.append(String.format("%02x", b));
}""",
            """String hex = DatatypeConverter.printHexBinary(digest).toLowerCase();""",
            """byte[] bytes = input.getBytes(StandardCharsets.UTF_8);
String encoded = Base64.getEncoder().encodeToString(bytes);""",
        ],
    },
    {
        "key": "jdbc",
        "query": "Connect to MySQL database and execute a query",
        "gt_api": ["DriverManager", "Connection", "PreparedStatement", "ResultSet"],
        "titles": [
            "How to connect to a MySQL database in Java",
            "Execute select query with JDBC and read results",
            "Use PreparedStatement to insert rows",
            "JDBC connection to MySQL fails with driver error",
        ],
        "q_prose": [
            "I want to connect to my mysql database and run a select query.",
            "How do I read the rows returned by a jdbc query?",
        ],
        "a_prose": [
            "Get a Connection from DriverManager, prepare a statement and iterate the ResultSet.",
            "Always close the Connection and PreparedStatement, preferably with try-with-resources.",
        ],
        "snippets": [
            """Connection conn = DriverManager.getConnection("jdbc:mysql://localhost/db", user, pass);
PreparedStatement ps = conn.prepareStatement("SELECT id, name FROM users WHERE age > ?");
ps.setInt(1, 18);
ResultSet rs = ps.executeQuery();
while (rs.next()) {
    System.out.println(rs.getString("name"));
}
conn.close();""",
            """Class.forName("com.mysql.jdbc.Driver");
Connection connection = DriverManager.getConnection(url, props);""",
            """try (PreparedStatement insert = connection.prepareStatement("INSERT INTO t VALUES (?, ?)")) {
    insert.setString(1, key);
    insert.setString(2, value);
    insert.executeUpdate();
} catch (SQLException e) {
    e.printStackTrace();
}""",
            """Statement stmt = conn.createStatement();
ResultSet result = stmt.executeQuery(sql);
ResultSetMetaData meta = result.getMetaData();""",
        ],
    },
    {
        "key": "threadpool",
        "query": "Run tasks in a background thread pool",
        "gt_api": ["ExecutorService", "Executors", "Future"],
        "titles": [
            "How to run tasks in a thread pool in Java",
            "Wait for all background threads to finish",
            "Submit callable tasks and collect results",
            "Shutdown executor service gracefully",
        ],
        "q_prose": [
            "I have many tasks and want to run them in parallel in background threads.",
            "How do I wait until all tasks submitted to a pool are done?",
        ],
        "a_prose": [
            "Create an ExecutorService with Executors.newFixedThreadPool and submit Callable tasks.",
            "Each submit returns a Future; call get to wait for the result, then shutdown the pool.",
        ],
        "snippets": [
            """ExecutorService pool = Executors.newFixedThreadPool(4);
List<Future<Integer>> futures = new ArrayList<>();
for (Callable<Integer> task : tasks) {
    futures.add(pool.submit(task));
}
for (Future<Integer> f : futures) {
    total += f.get();
}
pool.shutdown();""",
            """executor.shutdown();
if (!executor.awaitTermination(60, TimeUnit.SECONDS)) {
    executor.shutdownNow();
}""",
            """Thread worker = new Thread(new Runnable() {
    public void run() {
        doWork();
    }
});
worker.start();""",
            """CompletableFuture<String> future = CompletableFuture.supplyAsync(() -> load(id), executor);
String value = future.join();""",
        ],
    },
    {
        "key": "regex",
        "query": "Validate an email address with a regular expression",
        "gt_api": ["Pattern", "Matcher"],
        "titles": [
            "How to validate an email address with regex in Java",
            "Find all matches of a regular expression in a string",
            "Extract groups from regex match",
            "Check if string matches a pattern",
        ],
        "q_prose": [
            "I want to check whether a string is a valid email address using a regular expression.",
            "How do I extract all matches of a regex from some text?",
        ],
        "a_prose": [
            "Compile a Pattern once and use a Matcher to test or find matches.",
            "Call matcher.find in a loop and read each group.",
        ],
        "snippets": [
            """Pattern pattern = Pattern.compile("^[\\\\w.+-]+@[\\\\w-]+\\\\.[\\\\w.]+$");
Matcher matcher = pattern.matcher(email);
boolean valid = matcher.matches();""",
            """Matcher m = Pattern.compile("(\\\\d+)-(\\\\d+)").matcher(text);
while (m.find()) {
    System.out.println(m.group(1) + " " + m.group(2));
}""",
            """boolean ok = input.matches("[a-z]+");
String[] parts = input.split("\\\\s+");""",
            """Pattern p = Pattern.compile(regex, Pattern.CASE_INSENSITIVE);
String replaced = p.matcher(source).replaceAll("");""",
        ],
    },
    {
        "key": "serialize",
        "query": "Write an object to a file with serialization",
        "gt_api": ["ObjectOutputStream", "FileOutputStream", "ObjectInputStream"],
        "titles": [
            "How to serialize an object to a file in Java",
            "Read serialized object back from file",
            "Save object state to disk and restore it",
            "NotSerializableException when writing object",
        ],
        "q_prose": [
            "I want to save my object to a file and load it again later.",
            "Writing my object to disk fails with NotSerializableException.",
        ],
        "a_prose": [
            "Implement Serializable, then write the object with an ObjectOutputStream over a FileOutputStream.",
            "Read it back with an ObjectInputStream and cast the result.",
        ],
        "snippets": [
            """try (ObjectOutputStream oos = new ObjectOutputStream(new FileOutputStream("state.ser"))) {
    oos.writeObject(state);
}""",
            """ObjectInputStream ois = new ObjectInputStream(new FileInputStream("state.ser"));
State restored = (State) ois.readObject();
ois.close();""",
            """public class State implements Serializable {
    private static final long serialVersionUID = 1L;
    private transient Logger log;
}""",
            """ByteArrayOutputStream bos = new ByteArrayOutputStream();
ObjectOutputStream out = new ObjectOutputStream(bos);
out.writeObject(obj);
byte[] bytes = bos.toByteArray();""",
        ],
    },
]

NOISE_LINES = [
    'System.out.println("done");',
    "String name = value.toString();",
    "List<String> items = new ArrayList<>();",
    "Map<String, Integer> counts = new HashMap<>();",
    'throw new IllegalArgumentException("bad input");',
    "} catch (IOException e) {\n    e.printStackTrace();\n}",
    "Integer count = Integer.valueOf(raw);",
    'Logger.getLogger(Main.class.getName()).info("start");',
]

# Decoys for the grayscale query: share its natural-language vocabulary,
# not its API classes.
GRAYSCALE_DECOYS = [
    """// convert the image to grayscale without losing transparency
int grayscale = convertToGrayscale(pixel);
int transparency = pixel >>> 24;
result[i] = (transparency << 24) | (grayscale << 16) | (grayscale << 8) | grayscale;""",
    """/* convert grayscale image, keep transparency */
int[] grayscalePixels = convertImage(pixels, width, height);
boolean losing = checkTransparency(grayscalePixels);""",
    """GraphicsConfiguration gc = device.getDefaultConfiguration();
Image image = gc.createCompatibleImage(w, h, Transparency.TRANSLUCENT);
// transparency preserved when converting image""",
    """public static int toGrayscale(int argb) {
    // convert one pixel to grayscale, transparency untouched
    int a = (argb >> 24) & 0xff;
    int grayscale = ((argb >> 16 & 0xff) + (argb >> 8 & 0xff) + (argb & 0xff)) / 3;
    return (a << 24) | (grayscale << 16) | (grayscale << 8) | grayscale;
}""",
    """Image scaled = image.getScaledInstance(w, h, Image.SCALE_SMOOTH);
// converting the image this way risks losing transparency
ImageIcon icon = new ImageIcon(scaled);""",
    """String converted = converter.convert(imageName);
// grayscale flag controls transparency handling
options.setGrayscale(true);
options.setTransparency(false);""",
    """int transparency = image.getTransparency();
if (transparency == Transparency.OPAQUE) {
    // convert the image before losing grayscale detail
    image = convertImage(image);
}""",
]


def _post(rng, prose, code):
    text = "<p>" + html.escape(rng.choice(prose)) + "</p>"
    if code is not None:
        text += "\n<pre><code>" + html.escape(code) + "</code></pre>"
    return text


def build_threads(rng):
    records = []
    tid = 1000
    for topic in TOPICS:
        snippets = topic["snippets"]
        for i, title in enumerate(topic["titles"]):
            tid += 1
            q_code = snippets[(i + 1) % len(snippets)]
            a_code = snippets[i % len(snippets)]
            if topic["key"] == "grayscale" and i == 0:
                # the showcase thread carries the listing in its question
                q_code, a_code = snippets[0], snippets[3]
            records.append({
                "id": tid,
                "title": title,
                "question_html": _post(rng, topic["q_prose"], q_code) + (
                    "\n<p>I also tried <code>" + html.escape(rng.choice(NOISE_LINES)) + "</code></p>"
                    if i % 2 else ""
                ),
                "answer_html": _post(rng, topic["a_prose"], a_code),
                "tags": ["java", topic["key"]],
                "accepted": True,
            })
    # rejected by each filter in turn
    records.append({
        "id": 9001, "title": "Convert image to grayscale, no accepted answer",
        "question_html": "<pre><code>BufferedImage img = null;</code></pre>",
        "answer_html": "<pre><code>ColorConvertOp op = null;</code></pre>",
        "tags": ["java"], "accepted": False,
    })
    records.append({
        "id": 9002, "title": "General question about images without code",
        "question_html": "<p>Which image library is best for grayscale conversion?</p>",
        "answer_html": "<p>It depends on what you need.</p>",
        "tags": ["java"], "accepted": True,
    })
    records.append({
        "id": 9003, "title": "Grayscale image in Python",
        "question_html": "<pre><code>img = Image.open(path).convert('L')</code></pre>",
        "answer_html": "<pre><code>img.save(out)</code></pre>",
        "tags": ["python"], "accepted": True,
    })
    return records


def build_code_corpus(rng):
    docs = []
    gt = {}
    next_id = 1

    def add(code):
        nonlocal next_id
        docs.append({"id": next_id, "code": code})
        next_id += 1
        return next_id - 1

    for topic in TOPICS:
        snippets = topic["snippets"]
        gt[topic["key"]] = add(snippets[0])
        for j in range(15):
            a = snippets[1 + j % (len(snippets) - 1)]
            parts = [a]
            if j % 3 == 0:
                parts.append(rng.choice(snippets[1:]))
            if j % 2 == 0:
                parts.append(rng.choice(NOISE_LINES))
            rng.shuffle(parts)
            add("\n".join(parts))
    for decoy in GRAYSCALE_DECOYS:
        add(decoy)
    rng.shuffle(docs)
    return docs, gt


def main():
    rng = random.Random(SEED)
    OUT.mkdir(parents=True, exist_ok=True)
    threads = build_threads(rng)
    docs, gt = build_code_corpus(rng)
    with (OUT / "qa_threads.jsonl").open("w", encoding="utf-8") as fh:
        for r in threads:
            fh.write(json.dumps(r, sort_keys=True) + "\n")
    with (OUT / "code_corpus.jsonl").open("w", encoding="utf-8") as fh:
        for d in docs:
            fh.write(json.dumps(d, sort_keys=True) + "\n")
    with (OUT / "eval_queries.jsonl").open("w", encoding="utf-8") as fh:
        for n, topic in enumerate(TOPICS, 1):
            fh.write(json.dumps({
                "id": n,
                "query": topic["query"],
                "gt_api": topic["gt_api"],
                "gt_code_ids": [gt[topic["key"]]],
            }, sort_keys=True) + "\n")
    print(f"{len(threads)} thread records, {len(docs)} code segments, {len(TOPICS)} queries -> {OUT}")


if __name__ == "__main__":
    main()
